#include "mkg/reformulation.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mkg/dynamics.hpp"
#include "mkg/fields.hpp"
#include "spectral/pointwise.hpp"

namespace mkg {
namespace {

ScalarField inv_d(const ScalarField& f) { return frac_op(f, -1.0, OperatorKind::homogeneous); }

double relative_l2(const ScalarField& x, const ScalarField& y) {
    return (x - y).l2_norm() / std::max(y.l2_norm(), 1e-300);
}

double relative_l2(const VectorField& x, const VectorField& y) {
    return (x - y).l2_norm() / std::max(y.l2_norm(), 1e-300);
}

}  // namespace

VectorField projected_current_term(const ScalarField& phi) {
    const ScalarField d1 = partial(phi, 1), d2 = partial(phi, 2);
    auto term = [&phi](const ScalarField& d) {
        return detail::pointwise(std::array{&phi, &d}, 2, true, [](const std::array<Complex, 2>& p) {
            return Complex(-std::imag(p[0] * std::conj(p[1])));
        });
    };
    return leray(VectorField(term(d1), term(d2)));
}

VectorField nullform_current_term(const ScalarField& phi) {
    const ScalarField u = phi.real_part();
    const ScalarField v = phi.imag_part();
    VectorField out = VectorField::zeros(phi.grid());
    for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k)
            if (k != j) out[j] += 2.0 * riesz(inv_d(null_form(u, v, j, k)), k);
    return out;
}

ScalarField transport_term(const ScalarField& phi, const VectorField& a) {
    const ScalarField d1 = partial(phi, 1), d2 = partial(phi, 2);
    return detail::pointwise(std::array{&a[1], &d1, &a[2], &d2}, 2, false, [](const std::array<Complex, 4>& p) {
        return Complex(0.0, -2.0) * (p[0] * p[1] + p[2] * p[3]);
    });
}

ScalarField nullform_transport_term(const ScalarField& phi, const VectorField& a) {
    ScalarField out = ScalarField::zeros(phi.grid(), false);
    for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k)
            if (k != j) out += null_form(phi, inv_d(riesz(a[k], j) - riesz(a[j], k)), j, k);
    return Complex(0.0, -1.0) * out;
}

IdentityReport check_identities(std::uint64_t seed, int n, int samples, bool div_free) {
    const Grid2D grid(n);
    IdentityReport report;
    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(i);
        const ScalarField phi = random_band_limited(grid, sample_seed, 0, 1.0, 1.0, grid.band(), false);
        VectorField a(random_band_limited(grid, sample_seed, 2, 1.0, 1.0, grid.band(), true),
                      random_band_limited(grid, sample_seed, 3, 1.0, 1.0, grid.band(), true));
        if (div_free) a = leray(a);
        report.current_error =
            std::max(report.current_error, relative_l2(nullform_current_term(phi), projected_current_term(phi)));
        report.transport_error =
            std::max(report.transport_error, relative_l2(nullform_transport_term(phi, a), transport_term(phi, a)));
    }
    return report;
}

}  // namespace mkg
