#include "mkg/elliptic.hpp"

#include <array>
#include <cmath>

#include "mkg/errors.hpp"
#include "spectral/pointwise.hpp"

namespace mkg {
namespace {

double dot(const ScalarField& x, const ScalarField& y) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.values().size(); ++i) sum += std::real(std::conj(x.values()[i]) * y.values()[i]);
    return sum;
}

// Inverse of |k|^2 + shift; shift > 0.
ScalarField precondition(const ScalarField& r, double shift) {
    return apply_multiplier(r, {[shift](const Wavevector& k) { return Complex(1.0 / (k.norm2() + shift)); },
                                1.0 / shift});
}

template <class Apply>
ScalarField pcg_solve(Apply&& apply, const ScalarField& rhs, double shift, const SolverOptions& options) {
    const int max_iter = options.max_iter > 0 ? options.max_iter : 10 * rhs.grid().n();
    const ScalarField b = truncate(rhs.to_spectral());
    const double b_norm = std::sqrt(dot(b, b));
    ScalarField x = ScalarField::zeros(b.grid(), true);
    if (b_norm == 0.0) return x;

    ScalarField r = b;
    ScalarField z = precondition(r, shift);
    ScalarField p = z;
    double rz = dot(r, z);
    double residual = 1.0;
    for (int it = 1; it <= max_iter; ++it) {
        const ScalarField ap = apply(p);
        const double alpha = rz / dot(p, ap);
        x += alpha * p;
        r -= alpha * ap;
        residual = std::sqrt(dot(r, r)) / b_norm;
        if (!std::isfinite(residual)) break;
        if (residual <= options.tolerance) return x;
        z = precondition(r, shift);
        const double rz_next = dot(r, z);
        p = z + (rz_next / rz) * p;
        rz = rz_next;
    }
    throw SolverDiverged(max_iter, residual);
}

ScalarField im_phi_conj_phi_t(const ScalarField& phi, const ScalarField& phi_t) {
    return detail::pointwise(std::array{&phi, &phi_t}, 2, true, [](const std::array<Complex, 2>& p) {
        return Complex(std::imag(p[0] * std::conj(p[1])));
    });
}

}  // namespace

ScalarField solve_a0(const ScalarField& phi, const ScalarField& phi_t, const SolverOptions& options) {
    const ScalarField rhs = im_phi_conj_phi_t(phi, phi_t);
    if (phi.max_abs() == 0.0) return inv_laplacian(-1.0 * rhs);
    const double shift = detail::pointwise_mean(std::array{&phi}, 2, [](const std::array<Complex, 1>& p) {
                             return Complex(std::norm(p[0]));
                         }).real();
    auto apply = [&phi](const ScalarField& u) {
        return -1.0 * laplacian(u) + detail::pointwise(std::array{&phi, &u}, 3, true, [](const std::array<Complex, 2>& p) {
                   return std::norm(p[0]) * p[1];
               });
    };
    return pcg_solve(apply, rhs, shift, options);
}

ScalarField solve_screened_poisson(const ScalarField& potential, const ScalarField& rhs, const SolverOptions& options) {
    if (potential.max_abs() == 0.0) return -1.0 * inv_laplacian(rhs);
    const double shift = potential.mean().real();
    auto apply = [&potential](const ScalarField& u) { return -1.0 * laplacian(u) + dealias_product(potential, u); };
    return pcg_solve(apply, rhs, shift, options);
}

ScalarField compute_b0(const ScalarField& phi, const ScalarField& phi_t, const VectorField& a) {
    (void)phi_t;
    return inv_laplacian(partial(spatial_current(phi, a[1], 1), 1) + partial(spatial_current(phi, a[2], 2), 2));
}

double a0_residual(const State& state) {
    const ScalarField rest = detail::pointwise(std::array{&state.phi, &state.a0, &state.phi_t}, 3, true,
                                               [](const std::array<Complex, 3>& p) {
                                                   return Complex(-std::norm(p[0]) * p[1].real() +
                                                                  std::imag(p[0] * std::conj(p[2])));
                                               });
    const double residual = (laplacian(state.a0) + rest).l2_norm();
    return residual / (1.0 + state.a0.l2_norm() + std::pow(state.phi.l2_norm(), 2));
}

}  // namespace mkg
