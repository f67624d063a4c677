#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "mkg/cli.hpp"

namespace mkg::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& message) {
    throw ConfigError(source + ": " + message);
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& source,
                    const std::string& prefix) {
    for (const auto& [key, value] : obj.items())
        if (!known.count(key)) fail(source, "unknown field '" + prefix + key + "'");
}

double number(const json& obj, const char* key, double fallback, const std::string& source, const std::string& prefix) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(source, "field '" + prefix + key + "' must be a number");
    return v.get<double>();
}

template <class Int>
Int integer(const json& obj, const char* key, Int fallback, const std::string& source, const std::string& prefix) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if constexpr (std::is_unsigned_v<Int>) {
        if (!v.is_number_unsigned()) fail(source, "field '" + prefix + key + "' must be a non-negative integer");
    } else {
        if (!v.is_number_integer()) fail(source, "field '" + prefix + key + "' must be an integer");
    }
    return v.get<Int>();
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& source) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        fail(source, "line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
    }
    if (!doc.is_object()) fail(source, "top level must be a JSON object");
    reject_unknown(doc, {"n", "length", "dt", "t_end", "formulation", "seed", "monitor_stride", "out", "snapshots", "data"},
                   source, "");

    RunConfig cfg;
    SimConfig& sim = cfg.sim;
    sim.n = integer(doc, "n", sim.n, source, "");
    sim.length = number(doc, "length", sim.length, source, "");
    sim.dt = number(doc, "dt", sim.dt, source, "");
    sim.t_end = number(doc, "t_end", sim.t_end, source, "");
    sim.seed = integer(doc, "seed", sim.seed, source, "");
    sim.monitor_stride = integer(doc, "monitor_stride", sim.monitor_stride, source, "");
    if (doc.contains("formulation")) {
        if (!doc["formulation"].is_string()) fail(source, "field 'formulation' must be a string");
        try {
            sim.formulation = parse_formulation(doc["formulation"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(source, std::string("field 'formulation': ") + e.what());
        }
    }
    if (doc.contains("out")) {
        if (!doc["out"].is_string()) fail(source, "field 'out' must be a string");
        cfg.out = doc["out"].get<std::string>();
    }
    if (doc.contains("snapshots")) {
        if (!doc["snapshots"].is_boolean()) fail(source, "field 'snapshots' must be true or false");
        cfg.snapshots = doc["snapshots"].get<bool>();
    }
    if (doc.contains("data")) {
        const json& d = doc["data"];
        if (!d.is_object()) fail(source, "field 'data' must be an object");
        reject_unknown(d, {"s", "sp", "amplitude", "band"}, source, "data.");
        sim.data.s = number(d, "s", sim.data.s, source, "data.");
        sim.data.sp = number(d, "sp", sim.data.sp, source, "data.");
        sim.data.amplitude = number(d, "amplitude", sim.data.amplitude, source, "data.");
        sim.data.band = integer(d, "band", sim.data.band, source, "data.");
    }
    try {
        sim.validate();
    } catch (const std::invalid_argument& e) {
        fail(source, e.what());
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string() + ": cannot open config file");
    return parse_config(in, path.string());
}

}  // namespace mkg::cli
