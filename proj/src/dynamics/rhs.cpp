#include <array>
#include <cmath>

#include "mkg/dynamics.hpp"
#include "mkg/elliptic.hpp"
#include "mkg/errors.hpp"
#include "mkg/reformulation.hpp"
#include "spectral/pointwise.hpp"

namespace mkg {
namespace {

// -2i A0 phi_t - i B0 phi - (|A|^2 - A0^2) phi, the part shared by both forms.
ScalarField potential_terms(const State& s, const ScalarField& b0) {
    return detail::pointwise(std::array{&s.phi, &s.phi_t, &s.a[1], &s.a[2], &s.a0, &b0}, 3, false,
                             [](const std::array<Complex, 6>& p) {
                                 const Complex i(0.0, 1.0);
                                 const double a1 = p[2].real(), a2 = p[3].real(), a0 = p[4].real();
                                 return -2.0 * i * a0 * p[1] - i * p[5].real() * p[0] -
                                        (a1 * a1 + a2 * a2 - a0 * a0) * p[0];
                             });
}

ScalarField squared_modulus_times(const ScalarField& phi, const ScalarField& a) {
    return detail::pointwise(std::array{&phi, &a}, 3, true,
                             [](const std::array<Complex, 2>& p) { return std::norm(p[0]) * p[1]; });
}

}  // namespace

StateRate rhs_direct(const State& s) {
    const ScalarField b0 = compute_b0(s.phi, s.phi_t, s.a);
    ScalarField phi_tt = laplacian(s.phi) - transport_term(s.phi, s.a) + potential_terms(s, b0);

    // Im(phi conj d_j phi) - |phi|^2 A_j + d_j B0 = -J_j + d_j B0
    VectorField forcing(partial(b0, 1) - spatial_current(s.phi, s.a[1], 1),
                        partial(b0, 2) - spatial_current(s.phi, s.a[2], 2));
    VectorField a_tt = VectorField(laplacian(s.a[1]), laplacian(s.a[2])) + leray(forcing);
    return {s.phi_t, std::move(phi_tt), s.a_t, std::move(a_tt), b0};
}

StateRate rhs_nullform(const State& s) {
    if (!satisfies_coulomb_gauge(s)) throw GaugeViolation(gauge_divergence(s));
    const ScalarField b0 = compute_b0(s.phi, s.phi_t, s.a);
    ScalarField phi_tt = laplacian(s.phi) - nullform_transport_term(s.phi, s.a) + potential_terms(s, b0);

    const VectorField quadratic = nullform_current_term(s.phi);
    const VectorField cubic = leray(VectorField(squared_modulus_times(s.phi, s.a[1]), squared_modulus_times(s.phi, s.a[2])));
    VectorField a_tt = VectorField(laplacian(s.a[1]), laplacian(s.a[2])) - (quadratic + cubic);
    return {s.phi_t, std::move(phi_tt), s.a_t, std::move(a_tt), b0};
}

StateRate rhs(const State& state, Formulation formulation) {
    return formulation == Formulation::direct ? rhs_direct(state) : rhs_nullform(state);
}

bool StateRate::all_finite() const {
    return phi.all_finite() && phi_t.all_finite() && a[1].all_finite() && a[2].all_finite() && a_t[1].all_finite() &&
           a_t[2].all_finite() && a0.all_finite();
}

}  // namespace mkg
