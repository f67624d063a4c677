#include "mkg/fields.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "spectral/pointwise.hpp"

namespace mkg {
namespace {

void require_space_axis(int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("spatial index must be 1 or 2");
}

double cell_area(const Grid2D& g) { return g.length() * g.length(); }

}  // namespace

State State::zeros(const Grid2D& grid) {
    return State{ScalarField::zeros(grid, false), ScalarField::zeros(grid, false), VectorField::zeros(grid),
                 VectorField::zeros(grid), ScalarField::zeros(grid, true), 0.0};
}

ScalarField covariant_d(const State& state, int alpha) {
    if (alpha == 0) {
        return detail::pointwise(std::array{&state.phi_t, &state.a0, &state.phi}, 2, false,
                                 [](const std::array<Complex, 3>& p) { return p[0] + Complex(0.0, 1.0) * p[1] * p[2]; });
    }
    require_space_axis(alpha);
    const ScalarField d = partial(state.phi, alpha);
    return detail::pointwise(std::array{&d, &state.a[alpha], &state.phi}, 2, false,
                             [](const std::array<Complex, 3>& p) { return p[0] + Complex(0.0, 1.0) * p[1] * p[2]; });
}

ScalarField spatial_current(const ScalarField& phi, const ScalarField& a_j, int axis) {
    require_space_axis(axis);
    const ScalarField d = partial(phi, axis);
    // -Im(phi conj(d phi + i A phi)) = -Im(phi conj(d phi)) + A |phi|^2
    return detail::pointwise(std::array{&phi, &d, &a_j}, 3, true, [](const std::array<Complex, 3>& p) {
        return Complex(-std::imag(p[0] * std::conj(p[1])) + p[2].real() * std::norm(p[0]));
    });
}

Current current(const State& state) {
    ScalarField j0 = detail::pointwise(std::array{&state.phi, &state.phi_t, &state.a0}, 3, true,
                                       [](const std::array<Complex, 3>& p) {
                                           return Complex(-std::imag(p[0] * std::conj(p[1])) +
                                                          p[2].real() * std::norm(p[0]));
                                       });
    return {std::move(j0), spatial_current(state.phi, state.a[1], 1), spatial_current(state.phi, state.a[2], 2)};
}

ScalarField null_form(const ScalarField& u, const ScalarField& v, int j, int k) {
    require_space_axis(j);
    require_space_axis(k);
    if (j == k) throw std::invalid_argument("null form needs two distinct indices");
    const ScalarField uj = partial(u, j), uk = partial(u, k), vj = partial(v, j), vk = partial(v, k);
    return detail::pointwise(std::array{&uj, &vk, &uk, &vj}, 2, u.real_tagged() && v.real_tagged(),
                             [](const std::array<Complex, 4>& p) { return p[0] * p[1] - p[2] * p[3]; });
}

double charge(const State& state) {
    const Complex mean = detail::pointwise_mean(std::array{&state.phi, &state.phi_t, &state.a0}, 3,
                                                [](const std::array<Complex, 3>& p) {
                                                    return Complex(-std::imag(p[0] * std::conj(p[1])) +
                                                                   p[2].real() * std::norm(p[0]));
                                                });
    return cell_area(state.grid()) * mean.real();
}

FieldStrength field_strength(const State& state) {
    return {state.a_t[1] - partial(state.a0, 1), state.a_t[2] - partial(state.a0, 2),
            partial(state.a[2], 1) - partial(state.a[1], 2)};
}

double energy(const State& state) {
    const ScalarField d1 = partial(state.phi, 1);
    const ScalarField d2 = partial(state.phi, 2);
    const Complex matter = detail::pointwise_mean(
        std::array{&state.phi, &state.phi_t, &d1, &d2, &state.a0, &state.a[1], &state.a[2]}, 4,
        [](const std::array<Complex, 7>& p) {
            const Complex i(0.0, 1.0);
            return Complex(std::norm(p[1] + i * p[4] * p[0]) + std::norm(p[2] + i * p[5] * p[0]) +
                           std::norm(p[3] + i * p[6] * p[0]));
        });
    const FieldStrength f = field_strength(state);
    const double fields = std::pow(f.f01.l2_norm(), 2) + std::pow(f.f02.l2_norm(), 2) + std::pow(f.f12.l2_norm(), 2);
    return 0.5 * (cell_area(state.grid()) * matter.real() + fields);
}

double sobolev_norm(const ScalarField& f, double s, OperatorKind kind) {
    return frac_op(f.to_spectral(), s, kind).l2_norm();
}

double gauge_divergence(const State& state) {
    return std::max(divergence(state.a).l2_norm(), divergence(state.a_t).l2_norm());
}

bool satisfies_coulomb_gauge(const State& state, double tol) {
    return gauge_divergence(state) <= tol * (1.0 + state.a.l2_norm() + state.a_t.l2_norm());
}

}  // namespace mkg
