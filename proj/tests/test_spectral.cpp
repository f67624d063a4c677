#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "mkg/dynamics.hpp"
#include "mkg/errors.hpp"
#include "mkg/field_io.hpp"
#include "mkg/spectral.hpp"

using namespace mkg;

namespace {

double max_diff(const ScalarField& a, const ScalarField& b) { return relative_difference(a, b, 1.0); }

ScalarField sine(const Grid2D& g, double m1, double m2) {
    return ScalarField::sample(g, [=](double x1, double x2) { return std::sin(m1 * x1 + m2 * x2); }, true);
}

VectorField random_vector(const Grid2D& g, std::uint64_t seed) {
    return VectorField(random_band_limited(g, seed, 2, 0.0, 1.0, g.band(), true),
                       random_band_limited(g, seed, 3, 0.0, 1.0, g.band(), true));
}

double inner(const VectorField& x, const VectorField& y) {
    double sum = 0.0;
    for (int j = 1; j <= 2; ++j) {
        const ScalarField a = x[j].to_spectral(), b = y[j].to_spectral();
        for (std::size_t i = 0; i < a.values().size(); ++i) sum += std::real(std::conj(a.values()[i]) * b.values()[i]);
    }
    return sum;
}

}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(Grid2D(4), std::invalid_argument);
    CHECK_THROWS_AS(Grid2D(12), std::invalid_argument);
    CHECK_THROWS_AS(Grid2D(16, -1.0), std::invalid_argument);
    const Grid2D g(16);
    CHECK(g.band() == 5);
    CHECK(g.mode(15) == -1);
    CHECK(g.mode(8) == -8);
}

TEST_CASE("round trip physical to spectral to physical") {
    const Grid2D g(32);
    const ScalarField f = ScalarField::sample(g, [](double x1, double x2) { return std::exp(std::sin(3 * x1) * std::cos(x2)); }, true);
    CHECK(max_diff(f.to_spectral().to_physical(), f) <= 1e-13);
}

TEST_CASE("plane wave has unit coefficient") {
    const Grid2D g(16);
    const ScalarField f = ScalarField::sample(g, [](double x1, double x2) { return std::exp(Complex(0, 2 * x1 - x2)); }, false);
    CHECK(std::abs(f.coefficient(2, -1) - 1.0) < 1e-14);
    CHECK(std::abs(f.coefficient(1, -1)) < 1e-14);
}

TEST_CASE("apply_multiplier") {
    const Grid2D g(16);
    const ScalarField c = ScalarField::constant(g, 3.5, true);
    CHECK(max_diff(apply_multiplier(c, {[](const Wavevector&) { return Complex(7.0); }, 1.0}), c) < 1e-15);
    const ScalarField w = ScalarField::plane_wave(g, 1, 0);
    CHECK(max_diff(apply_multiplier(w, {[](const Wavevector& k) { return Complex(k.norm2()); }, 0.0}), w) < 1e-14);
    const ScalarField zero = apply_multiplier(w, {[](const Wavevector&) { return Complex(0.0); }, 0.0});
    CHECK(zero.max_abs() == 0.0);
    CHECK_THROWS_AS(apply_multiplier(w, {[](const Wavevector&) { return Complex(INFINITY); }, 0.0}), std::invalid_argument);
    CHECK(apply_multiplier(w.to_physical(), {[](const Wavevector&) { return Complex(1.0); }, 1.0}).representation() ==
          Representation::physical);
}

TEST_CASE("riesz examples") {
    const Grid2D g(16);
    CHECK(riesz(ScalarField::constant(g, 2.0, true), 1).max_abs() == 0.0);
    const ScalarField w = ScalarField::plane_wave(g, 1, 0);
    CHECK(max_diff(riesz(w, 1), Complex(0, 1) * w) < 1e-14);
    CHECK(riesz(ScalarField::plane_wave(g, 0, 3), 1).max_abs() < 1e-15);
    CHECK_THROWS_AS(riesz(w, 3), std::invalid_argument);
}

TEST_CASE("frac_op examples") {
    const Grid2D g(16);
    const ScalarField f = random_band_limited(g, 3, 0, 0.0, 1.0, 5, false);
    CHECK(max_diff(frac_op(f, 0.0, OperatorKind::inhomogeneous), f) < 1e-15);
    CHECK(max_diff(frac_op(sine(g, 1, 0), 1.0, OperatorKind::homogeneous), sine(g, 1, 0)) < 1e-14);
    const ScalarField w = ScalarField::plane_wave(g, 1, 0);
    CHECK(max_diff(frac_op(w, 2.0, OperatorKind::inhomogeneous), 2.0 * w) < 1e-14);
    CHECK(std::abs(frac_op(ScalarField::constant(g, 1.0, true), -1.0, OperatorKind::homogeneous).mean()) == 0.0);
}

TEST_CASE("inv_laplacian examples") {
    const Grid2D g(16);
    CHECK(max_diff(inv_laplacian(sine(g, 1, 0)), -1.0 * sine(g, 1, 0)) < 1e-14);
    CHECK(max_diff(inv_laplacian(sine(g, 2, 0)), -0.25 * sine(g, 2, 0)) < 1e-14);
    CHECK_THROWS_AS(inv_laplacian(ScalarField::constant(g, 1.0, true)), MeanNotZero);
}

TEST_CASE("leray examples") {
    const Grid2D g(32);
    const VectorField div_free(sine(g, 0, 1), ScalarField::zeros(g, true));
    const VectorField p = leray(div_free);
    CHECK(max_diff(p[1], div_free[1]) < 1e-12);
    CHECK(p[2].max_abs() < 1e-12);

    const ScalarField h = random_band_limited(g, 11, 0, 0.0, 1.0, g.band(), true);
    CHECK(leray(gradient(h)).l2_norm() <= 1e-12 * gradient(h).l2_norm());

    const VectorField x = random_vector(g, 5);
    const VectorField px = leray(x);
    CHECK((leray(px) - px).l2_norm() <= 1e-12 * x.l2_norm());
    CHECK(std::abs(inner(px, x - px)) <= 1e-10 * inner(x, x));
    CHECK(divergence(px).l2_norm() <= 1e-12 * x.l2_norm());
    CHECK(px[1].real_tagged());
}

TEST_CASE("dealias_product examples") {
    const Grid2D g(16);
    const ScalarField f = random_band_limited(g, 2, 0, 0.0, 1.0, g.band(), false);
    const ScalarField one = ScalarField::constant(g, 1.0, true);
    CHECK(max_diff(dealias_product(f, one), truncate(f)) < 1e-13);

    const ScalarField w = ScalarField::plane_wave(g, 1, 0);
    CHECK(max_diff(dealias_product(w, w), ScalarField::plane_wave(g, 2, 0)) < 1e-14);

    // Mode n/4 lies inside the band, its cube 3n/4 does not and must not alias back.
    const ScalarField q = ScalarField::plane_wave(g, g.n() / 4, 0);
    CHECK(dealias_product(q, q, q).max_abs() < 1e-15);
    const ScalarField fs[] = {q, q, q};
    CHECK(dealias_product(std::span<const ScalarField>(fs)).max_abs() < 1e-15);
    CHECK_THROWS_AS(dealias_product(std::span<const ScalarField>(fs, 1)), std::invalid_argument);
    CHECK_THROWS_AS(dealias_product(w, ScalarField::plane_wave(Grid2D(32), 1, 0)), std::invalid_argument);
}

TEST_CASE("cubic products are exact inside the band") {
    const Grid2D g(32);
    const ScalarField a = random_band_limited(g, 4, 0, 0.0, 1.0, 3, false);
    const ScalarField b = random_band_limited(g, 4, 1, 0.0, 1.0, 3, false);
    const ScalarField c = random_band_limited(g, 4, 2, 0.0, 1.0, 3, false);
    // band 3 inputs: the product has modes up to 9 < n/3, so plain physical multiplication is exact
    std::vector<Complex> v(g.size());
    const ScalarField pa = a.to_physical(), pb = b.to_physical(), pc = c.to_physical();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = pa.values()[i] * pb.values()[i] * pc.values()[i];
    const ScalarField direct(g, Representation::physical, v, false);
    CHECK(max_diff(dealias_product(a, b, c), direct) < 1e-13);
}

TEST_CASE("symbols on every retained mode") {
    for (int n : {8, 32}) {
        const Grid2D g(n);
        const int K = g.band();
        for (int m1 = -K; m1 <= K; ++m1)
            for (int m2 = -K; m2 <= K; ++m2) {
                const ScalarField e = ScalarField::plane_wave(g, m1, m2);
                const double k2 = m1 * m1 + m2 * m2;
                const double k = std::sqrt(k2);
                CHECK(max_diff(partial(e, 1), Complex(0, m1) * e) <= 1e-12);
                CHECK(max_diff(laplacian(e), -k2 * e) <= 1e-12);
                if (k2 > 0) {
                    CHECK(max_diff(riesz(e, 2), Complex(0, m2 / k) * e) <= 1e-12);
                    CHECK(max_diff(inv_laplacian(e), (-1.0 / k2) * e) <= 1e-12);
                    CHECK(max_diff(frac_op(e, 0.5, OperatorKind::homogeneous), std::sqrt(k) * e) <= 1e-12);
                    const ScalarField r2 = riesz(riesz(e, 1), 1) + riesz(riesz(e, 2), 2);
                    CHECK(max_diff(r2, -1.0 * e) <= 1e-12);
                }
                CHECK(max_diff(frac_op(e, -1.5, OperatorKind::inhomogeneous), std::pow(1 + k2, -0.75) * e) <= 1e-12);
            }
    }
}

TEST_CASE("real fields stay real") {
    const Grid2D g(16);
    const ScalarField f = random_band_limited(g, 9, 4, 0.0, 1.0, g.band(), true);
    CHECK(f.real_tagged());
    const ScalarField d = partial(f, 1).to_physical();
    CHECK(d.real_tagged());
    for (Complex z : d.values()) CHECK(z.imag() == 0.0);
    std::vector<Complex> bad(g.size(), Complex(0.0, 1.0));
    CHECK_THROWS_AS(ScalarField(g, Representation::physical, bad, true), std::invalid_argument);
}

TEST_CASE("conjugate, real and imaginary parts in spectral space") {
    const Grid2D g(16);
    const ScalarField f = random_band_limited(g, 1, 0, 0.0, 1.0, g.band(), false);
    const ScalarField p = f.to_physical();
    std::vector<Complex> c(g.size()), re(g.size()), im(g.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = std::conj(p.values()[i]);
        re[i] = p.values()[i].real();
        im[i] = p.values()[i].imag();
    }
    CHECK(max_diff(f.conj(), ScalarField(g, Representation::physical, c, false)) < 1e-13);
    CHECK(max_diff(f.real_part(), ScalarField(g, Representation::physical, re, true)) < 1e-13);
    CHECK(max_diff(f.imag_part(), ScalarField(g, Representation::physical, im, true)) < 1e-13);
}

TEST_CASE("Parseval") {
    const Grid2D g(32);
    const ScalarField f = random_band_limited(g, 21, 0, 0.0, 1.0, g.band(), false);
    const double physical = f.to_physical().l2_norm();
    CHECK(std::abs(f.l2_norm() - physical) <= 1e-12 * physical);
    CHECK(std::abs(ScalarField::plane_wave(g, 1, 0).l2_norm() - 2 * std::numbers::pi) < 1e-12);
}

TEST_CASE("field dump round trip") {
    const Grid2D g(8);
    for (bool physical : {false, true})
        for (bool real : {false, true}) {
            ScalarField f = random_band_limited(g, 5, 0, 0.0, 1.0, g.band(), real);
            if (physical) f = f.to_physical();
            std::stringstream buf;
            write_field(buf, f, "phi");
            std::string header;
            std::getline(buf, header);
            const std::size_t expected = (physical && real ? 1 : 2) * g.size() * 8;
            CHECK(buf.str().size() == header.size() + 1 + expected);
            buf.seekg(0);
            const NamedField back = read_field(buf);
            CHECK(back.name == "phi");
            CHECK(back.field.real_tagged() == real);
            CHECK(back.field.representation() == f.representation());
            for (std::size_t i = 0; i < g.size(); ++i) CHECK(back.field.values()[i] == f.values()[i]);
        }
    std::stringstream bad("{\"n\":8}\n");
    CHECK_THROWS_AS(read_field(bad), std::runtime_error);
}
