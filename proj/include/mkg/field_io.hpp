#pragma once

// Raw field dumps: one line of JSON
//   {"n":..,"length":..,"representation":"physical"|"spectral","real_tagged":..,"name":..}
// followed by little-endian float64 values in row-major order. Real-tagged
// physical fields store one value per point; everything else stores
// interleaved (re, im) pairs.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mkg/spectral.hpp"

namespace mkg {

struct NamedField {
    ScalarField field;
    std::string name;
};

void write_field(std::ostream& out, const ScalarField& f, const std::string& name);
void write_field(const std::filesystem::path& path, const ScalarField& f, const std::string& name);

/// Throws std::runtime_error on malformed headers or truncated data.
NamedField read_field(std::istream& in);
NamedField read_field(const std::filesystem::path& path);

}  // namespace mkg
