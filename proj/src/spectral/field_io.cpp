#include "mkg/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace mkg {
namespace {

std::uint64_t to_little(std::uint64_t bits) {
    if constexpr (std::endian::native == std::endian::little) return bits;
    std::uint64_t out = 0;
    for (int i = 0; i < 8; ++i) out |= ((bits >> (8 * i)) & 0xffu) << (8 * (7 - i));
    return out;
}

void put(std::ostream& out, double x) {
    const std::uint64_t bits = to_little(std::bit_cast<std::uint64_t>(x));
    char bytes[8];
    std::memcpy(bytes, &bits, 8);
    out.write(bytes, 8);
}

double get(std::istream& in) {
    char bytes[8];
    if (!in.read(bytes, 8)) throw std::runtime_error("field dump is truncated");
    std::uint64_t bits;
    std::memcpy(&bits, bytes, 8);
    return std::bit_cast<double>(to_little(bits));
}

}  // namespace

void write_field(std::ostream& out, const ScalarField& f, const std::string& name) {
    const bool physical = f.representation() == Representation::physical;
    const nlohmann::json header = {{"n", f.grid().n()},
                                   {"length", f.grid().length()},
                                   {"representation", physical ? "physical" : "spectral"},
                                   {"real_tagged", f.real_tagged()},
                                   {"name", name}};
    out << header.dump() << '\n';
    const bool real_only = physical && f.real_tagged();
    for (const Complex& z : f.values()) {
        put(out, z.real());
        if (!real_only) put(out, z.imag());
    }
    if (!out) throw std::runtime_error("failed to write field '" + name + "'");
}

void write_field(const std::filesystem::path& path, const ScalarField& f, const std::string& name) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_field(out, f, name);
}

NamedField read_field(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("field dump has no header");
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("bad field dump header: ") + e.what());
    }
    for (const char* key : {"n", "length", "representation", "real_tagged", "name"})
        if (!header.contains(key)) throw std::runtime_error(std::string("field dump header lacks '") + key + "'");
    const std::string rep = header["representation"].get<std::string>();
    if (rep != "physical" && rep != "spectral") throw std::runtime_error("unknown representation '" + rep + "'");
    const Grid2D grid(header["n"].get<int>(), header["length"].get<double>());
    const bool physical = rep == "physical";
    const bool real = header["real_tagged"].get<bool>();
    std::vector<Complex> values(grid.size());
    for (auto& z : values) {
        const double re = get(in);
        const double im = (physical && real) ? 0.0 : get(in);
        z = Complex(re, im);
    }
    return {ScalarField(grid, physical ? Representation::physical : Representation::spectral, std::move(values), real),
            header["name"].get<std::string>()};
}

NamedField read_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_field(in);
}

}  // namespace mkg
