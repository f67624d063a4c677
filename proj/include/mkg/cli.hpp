#pragma once

// Command-line entry point: simulate, check-estimate, region, identities, convergence.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "mkg/dynamics.hpp"

namespace mkg::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_blowup = 2, exit_check_failed = 3 };

/// A SimConfig plus the output options read from a JSON config file.
struct RunConfig {
    SimConfig sim;
    std::optional<std::filesystem::path> out;
    bool snapshots = false;  ///< dump the initial and final state fields
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Keys: n, length, dt, t_end, formulation, seed, monitor_stride, out, snapshots and
/// data {s, sp, amplitude, band}. Unknown keys, wrong types and invalid values raise
/// ConfigError with the line or field at fault; `source` names the input in messages.
RunConfig parse_config(std::istream& in, const std::string& source = "config");
RunConfig load_config(const std::filesystem::path& path);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run(argc, const_cast<const char* const*>(argv), out, err);
}

}  // namespace mkg::cli
