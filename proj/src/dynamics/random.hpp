#pragma once

// Splittable seeding: splitmix64 turns (seed, stream) into an mt19937_64 seed,
// and normals come from Box-Muller on 53-bit uniforms, so streams are the same
// on every platform.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace mkg::detail {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t state = seed;
        const std::uint64_t base = splitmix64(state);
        state = base ^ (stream * 0xD1B54A32D192ED03ull);
        engine_.seed(splitmix64(state));
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
        has_spare_ = true;
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace mkg::detail
