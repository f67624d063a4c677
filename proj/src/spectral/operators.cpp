#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mkg/errors.hpp"
#include "mkg/spectral.hpp"
#include "spectral/fft.hpp"
#include "spectral/pointwise.hpp"

namespace mkg {

namespace detail {

int padded_size(const Grid2D& grid, int degree) {
    if (degree <= 2) return grid.n();
    if (degree <= 4) return 3 * grid.n() / 2;
    throw std::invalid_argument("de-aliased products support degree <= 4, got " + std::to_string(degree));
}

std::vector<Complex> lift(const ScalarField& f, int padded) {
    const ScalarField spec = f.to_spectral();
    const Grid2D& g = f.grid();
    const int band = g.band();
    std::vector<Complex> coeffs(static_cast<std::size_t>(padded) * padded);
    for (int m1 = -band; m1 <= band; ++m1) {
        const int src1 = g.index_of_mode(m1);
        const int dst1 = m1 >= 0 ? m1 : m1 + padded;
        for (int m2 = -band; m2 <= band; ++m2) {
            const int src2 = g.index_of_mode(m2);
            const int dst2 = m2 >= 0 ? m2 : m2 + padded;
            coeffs[static_cast<std::size_t>(dst1) * padded + dst2] = spec.at(src1, src2);
        }
    }
    std::vector<Complex> values(coeffs.size());
    fft_for(padded).backward(coeffs, values);
    return values;
}

ScalarField project(const Grid2D& grid, std::vector<Complex>& fine, int padded, bool real_tagged) {
    std::vector<Complex> coeffs(fine.size());
    fft_for(padded).forward(fine, coeffs);
    const double inv = 1.0 / static_cast<double>(coeffs.size());
    const int n = grid.n();
    const int band = grid.band();
    std::vector<Complex> out(grid.size());
    for (int m1 = -band; m1 <= band; ++m1) {
        const int src1 = m1 >= 0 ? m1 : m1 + padded;
        const int dst1 = grid.index_of_mode(m1);
        for (int m2 = -band; m2 <= band; ++m2) {
            const int src2 = m2 >= 0 ? m2 : m2 + padded;
            const int dst2 = grid.index_of_mode(m2);
            out[static_cast<std::size_t>(dst1) * n + dst2] = inv * coeffs[static_cast<std::size_t>(src1) * padded + src2];
        }
    }
    return ScalarField(grid, Representation::spectral, std::move(out), real_tagged);
}

}  // namespace detail

namespace {

void require_axis(int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2, got " + std::to_string(axis));
}

double component(const Wavevector& k, int axis) { return axis == 1 ? k.k1 : k.k2; }
bool on_nyquist(const Wavevector& k, int axis) { return axis == 1 ? k.nyquist1 : k.nyquist2; }

}  // namespace

ScalarField apply_multiplier(const ScalarField& f, const Multiplier& m) {
    const Grid2D& g = f.grid();
    const ScalarField spec = f.to_spectral();
    const int n = g.n();
    if (!std::isfinite(m.zero_mode.real()) || !std::isfinite(m.zero_mode.imag()))
        throw std::invalid_argument("multiplier has a non-finite zero mode");
    std::vector<Complex> out(g.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto idx = static_cast<std::size_t>(i) * n + j;
            Complex value;
            if (i == 0 && j == 0) {
                value = m.zero_mode;
            } else {
                const Wavevector k{g.wavenumber(i), g.wavenumber(j), g.mode(i), g.mode(j),
                                   g.mode(i) == -n / 2, g.mode(j) == -n / 2};
                value = m.symbol(k);
                if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
                    throw std::invalid_argument("multiplier is not finite at mode (" + std::to_string(k.m1) + ", " +
                                                std::to_string(k.m2) + ")");
            }
            out[idx] = value * spec.values()[idx];
        }
    }
    ScalarField result(g, Representation::spectral, std::move(out), f.real_tagged() && m.real_preserving);
    return result.in(f.representation());
}

ScalarField partial(const ScalarField& f, int axis) {
    require_axis(axis);
    return apply_multiplier(f, {[axis](const Wavevector& k) {
                                    return on_nyquist(k, axis) ? Complex(0.0) : Complex(0.0, component(k, axis));
                                },
                                0.0});
}

ScalarField laplacian(const ScalarField& f) {
    return apply_multiplier(f, {[](const Wavevector& k) { return Complex(-k.norm2()); }, 0.0});
}

ScalarField riesz(const ScalarField& f, int axis) {
    require_axis(axis);
    return apply_multiplier(f, {[axis](const Wavevector& k) {
                                    const double k1 = k.nyquist1 ? 0.0 : k.k1;
                                    const double k2 = k.nyquist2 ? 0.0 : k.k2;
                                    const double norm = std::hypot(k1, k2);
                                    if (norm == 0.0) return Complex(0.0);
                                    return Complex(0.0, (axis == 1 ? k1 : k2) / norm);
                                },
                                0.0});
}

ScalarField frac_op(const ScalarField& f, double alpha, OperatorKind kind) {
    if (kind == OperatorKind::inhomogeneous)
        return apply_multiplier(f, {[alpha](const Wavevector& k) { return Complex(std::pow(1.0 + k.norm2(), 0.5 * alpha)); },
                                    1.0});
    if (alpha == 0.0) return f;
    return apply_multiplier(f, {[alpha](const Wavevector& k) { return Complex(std::pow(k.norm(), alpha)); }, 0.0});
}

ScalarField inv_laplacian(const ScalarField& f) {
    const ScalarField spec = f.to_spectral();
    const double mean = std::abs(spec.values()[0]);
    if (mean > 1e-12 * std::max(1.0, spec.max_abs())) throw MeanNotZero(mean);
    return apply_multiplier(f, {[](const Wavevector& k) { return Complex(-1.0 / k.norm2()); }, 0.0});
}

ScalarField truncate(const ScalarField& f) {
    const int band = f.grid().band();
    return apply_multiplier(f, {[band](const Wavevector& k) {
                                    return (std::abs(k.m1) > band || std::abs(k.m2) > band) ? Complex(0.0)
                                                                                             : Complex(1.0);
                                },
                                1.0});
}

ScalarField divergence(const VectorField& v) { return partial(v[1], 1) + partial(v[2], 2); }

VectorField gradient(const ScalarField& f) { return VectorField(partial(f, 1), partial(f, 2)); }

VectorField leray(const VectorField& v) {
    VectorField out = VectorField::zeros(v.grid(), v[1].real_tagged() && v[2].real_tagged());
    for (int j = 1; j <= 2; ++j) {
        ScalarField acc = ScalarField::zeros(v.grid(), v[j].real_tagged());
        for (int k = 1; k <= 2; ++k) {
            if (k == j) continue;
            acc += riesz(riesz(v[k], j) - riesz(v[j], k), k);
        }
        out[j] = acc.in(v[j].representation());
    }
    return out;
}

ScalarField dealias_product(std::span<const ScalarField> factors) {
    if (factors.size() == 2) return dealias_product(factors[0], factors[1]);
    if (factors.size() == 3) return dealias_product(factors[0], factors[1], factors[2]);
    throw std::invalid_argument("dealias_product takes 2 or 3 factors, got " + std::to_string(factors.size()));
}

ScalarField dealias_product(const ScalarField& a, const ScalarField& b) {
    const bool real = a.real_tagged() && b.real_tagged();
    return detail::pointwise(std::array{&a, &b}, 2, real, [](const std::array<Complex, 2>& p) { return p[0] * p[1]; });
}

ScalarField dealias_product(const ScalarField& a, const ScalarField& b, const ScalarField& c) {
    const bool real = a.real_tagged() && b.real_tagged() && c.real_tagged();
    return detail::pointwise(std::array{&a, &b, &c}, 3, real,
                             [](const std::array<Complex, 3>& p) { return p[0] * p[1] * p[2]; });
}

}  // namespace mkg
