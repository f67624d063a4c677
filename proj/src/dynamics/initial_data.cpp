#include <cmath>
#include <stdexcept>

#include "dynamics/random.hpp"
#include "mkg/dynamics.hpp"
#include "mkg/elliptic.hpp"

namespace mkg {

ScalarField random_band_limited(const Grid2D& grid, std::uint64_t seed, std::uint64_t stream, double sigma,
                                double amplitude, int band, bool real_tagged) {
    if (band < 0 || band > grid.band()) throw std::invalid_argument("band must lie in [0, n/3]");
    detail::NormalStream rng(seed, stream);
    const int n = grid.n();
    std::vector<Complex> coeffs(grid.size());
    for (int m1 = -band; m1 <= band; ++m1) {
        for (int m2 = -band; m2 <= band; ++m2) {
            const double k1 = m1 * grid.base_wavenumber();
            const double k2 = m2 * grid.base_wavenumber();
            const double weight = amplitude * std::pow(1.0 + k1 * k1 + k2 * k2, -0.5 * (sigma + 1.0));
            const double re = rng.normal();
            const double im = rng.normal();
            coeffs[static_cast<std::size_t>(grid.index_of_mode(m1)) * n + grid.index_of_mode(m2)] =
                weight * Complex(re, im) / std::sqrt(2.0);
        }
    }
    ScalarField f(grid, Representation::spectral, std::move(coeffs), false);
    return real_tagged ? f.real_part() : f;
}

State make_initial_data(const SimConfig& cfg) {
    cfg.validate();
    const Grid2D grid = cfg.grid();
    const DataSpec& d = cfg.data;
    auto field = [&](std::uint64_t stream, double sigma, bool real) {
        return random_band_limited(grid, cfg.seed, stream, sigma, d.amplitude, d.band, real);
    };
    State state{field(0, d.s, false),
                field(1, d.s - 1.0, false),
                leray(VectorField(field(2, d.sp, true), field(3, d.sp, true))),
                leray(VectorField(field(4, d.sp - 1.0, true), field(5, d.sp - 1.0, true))),
                ScalarField::zeros(grid, true),
                0.0};
    state.a0 = solve_a0(state.phi, state.phi_t);
    return state;
}

}  // namespace mkg
