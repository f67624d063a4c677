#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mkg/spectral.hpp"
#include "spectral/fft.hpp"

namespace mkg {
namespace {

void require_same_grid(const Grid2D& a, const Grid2D& b) {
    if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

// Index of the mode -k for array index i.
int mirror(int i, int n) { return (n - i) % n; }

template <class F>
std::vector<Complex> mirrored_combine(const Grid2D& g, std::span<const Complex> v, F&& f) {
    const int n = g.n();
    std::vector<Complex> out(v.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto self = static_cast<std::size_t>(i) * n + j;
            const auto other = static_cast<std::size_t>(mirror(i, n)) * n + mirror(j, n);
            out[self] = f(v[self], v[other]);
        }
    return out;
}

}  // namespace

ScalarField::ScalarField(Grid2D grid, Representation rep, std::vector<Complex> values, bool real_tagged)
    : grid_(grid), rep_(rep), real_(real_tagged), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("field has " + std::to_string(values_.size()) + " values, grid needs " +
                                    std::to_string(grid_.size()));
    if (real_ && rep_ == Representation::physical) {
        const double scale = 1.0 + max_abs();
        for (auto& z : values_) {
            if (std::abs(z.imag()) > 1e-13 * scale)
                throw std::invalid_argument("real-tagged field has a non-negligible imaginary part");
            z = Complex(z.real(), 0.0);
        }
    }
}

ScalarField ScalarField::zeros(const Grid2D& grid, bool real_tagged, Representation rep) {
    return ScalarField(grid, rep, std::vector<Complex>(grid.size()), real_tagged);
}

ScalarField ScalarField::constant(const Grid2D& grid, Complex value, bool real_tagged) {
    std::vector<Complex> v(grid.size());
    v[0] = value;
    return ScalarField(grid, Representation::spectral, std::move(v), real_tagged);
}

ScalarField ScalarField::plane_wave(const Grid2D& grid, int m1, int m2, Complex amplitude) {
    const int half = grid.n() / 2;
    if (m1 < -half || m1 >= half || m2 < -half || m2 >= half)
        throw std::invalid_argument("plane wave mode outside the grid spectrum");
    std::vector<Complex> v(grid.size());
    v[static_cast<std::size_t>(grid.index_of_mode(m1)) * grid.n() + grid.index_of_mode(m2)] = amplitude;
    return ScalarField(grid, Representation::spectral, std::move(v), false);
}

Complex ScalarField::coefficient(int m1, int m2) const {
    const int half = grid_.n() / 2;
    if (m1 < -half || m1 >= half || m2 < -half || m2 >= half)
        throw std::out_of_range("mode outside the grid spectrum");
    const auto idx = static_cast<std::size_t>(grid_.index_of_mode(m1)) * grid_.n() + grid_.index_of_mode(m2);
    if (rep_ == Representation::spectral) return values_[idx];
    return to_spectral().values_[idx];
}

ScalarField ScalarField::to_spectral() const {
    if (rep_ == Representation::spectral) return *this;
    std::vector<Complex> out(values_.size());
    detail::fft_for(grid_.n()).forward(values_, out);
    const double inv = 1.0 / static_cast<double>(values_.size());
    for (auto& z : out) z *= inv;
    return ScalarField(grid_, Representation::spectral, std::move(out), real_);
}

ScalarField ScalarField::to_physical() const {
    if (rep_ == Representation::physical) return *this;
    std::vector<Complex> out(values_.size());
    detail::fft_for(grid_.n()).backward(values_, out);
    if (real_)
        for (auto& z : out) z = Complex(z.real(), 0.0);
    return ScalarField(grid_, Representation::physical, std::move(out), real_);
}

ScalarField ScalarField::conj() const {
    if (real_) return *this;
    if (rep_ == Representation::physical) {
        std::vector<Complex> v(values_.size());
        std::transform(values_.begin(), values_.end(), v.begin(), [](Complex z) { return std::conj(z); });
        return ScalarField(grid_, rep_, std::move(v), false);
    }
    return ScalarField(grid_, rep_, mirrored_combine(grid_, values_, [](Complex, Complex o) { return std::conj(o); }),
                       false);
}

ScalarField ScalarField::real_part() const {
    if (real_) return *this;
    if (rep_ == Representation::physical) {
        std::vector<Complex> v(values_.size());
        std::transform(values_.begin(), values_.end(), v.begin(), [](Complex z) { return Complex(z.real(), 0.0); });
        return ScalarField(grid_, rep_, std::move(v), true);
    }
    return ScalarField(grid_, rep_,
                       mirrored_combine(grid_, values_, [](Complex s, Complex o) { return 0.5 * (s + std::conj(o)); }),
                       true);
}

ScalarField ScalarField::imag_part() const {
    if (real_) return zeros(grid_, true, rep_);
    if (rep_ == Representation::physical) {
        std::vector<Complex> v(values_.size());
        std::transform(values_.begin(), values_.end(), v.begin(), [](Complex z) { return Complex(z.imag(), 0.0); });
        return ScalarField(grid_, rep_, std::move(v), true);
    }
    const Complex half_over_i(0.0, -0.5);
    return ScalarField(
        grid_, rep_,
        mirrored_combine(grid_, values_, [&](Complex s, Complex o) { return half_over_i * (s - std::conj(o)); }),
        true);
}

ScalarField ScalarField::as_real() const { return real_part(); }

ScalarField& ScalarField::operator+=(const ScalarField& other) {
    require_same_grid(grid_, other.grid_);
    const ScalarField rhs = other.in(rep_);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
    real_ = real_ && other.real_;
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
    require_same_grid(grid_, other.grid_);
    const ScalarField rhs = other.in(rep_);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
    real_ = real_ && other.real_;
    return *this;
}

ScalarField& ScalarField::operator*=(double c) {
    for (auto& z : values_) z *= c;
    return *this;
}

ScalarField& ScalarField::operator*=(Complex c) {
    if (c.imag() == 0.0) return *this *= c.real();
    for (auto& z : values_) z *= c;
    real_ = false;
    return *this;
}

double ScalarField::l2_norm() const {
    double sum = 0.0;
    for (const auto& z : values_) sum += std::norm(z);
    if (rep_ == Representation::spectral) return grid_.length() * std::sqrt(sum);
    return grid_.spacing() * std::sqrt(sum);
}

Complex ScalarField::mean() const {
    if (rep_ == Representation::spectral) return values_[0];
    Complex sum = 0.0;
    for (const auto& z : values_) sum += z;
    return sum / static_cast<double>(values_.size());
}

double ScalarField::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : values_) m = std::max(m, std::abs(z));
    return m;
}

bool ScalarField::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(),
                       [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator-(ScalarField a) { return a *= -1.0; }
ScalarField operator*(double c, ScalarField a) { return a *= c; }
ScalarField operator*(Complex c, ScalarField a) { return a *= c; }

double relative_difference(const ScalarField& a, const ScalarField& b, double floor) {
    const ScalarField pa = a.to_physical();
    const ScalarField pb = b.to_physical();
    require_same_grid(pa.grid(), pb.grid());
    double diff = 0.0;
    for (std::size_t i = 0; i < pa.values().size(); ++i)
        diff = std::max(diff, std::abs(pa.values()[i] - pb.values()[i]));
    return diff / std::max(pb.max_abs(), floor);
}

VectorField::VectorField(ScalarField x1, ScalarField x2) : x1_(std::move(x1)), x2_(std::move(x2)) {
    require_same_grid(x1_.grid(), x2_.grid());
}

VectorField VectorField::zeros(const Grid2D& grid, bool real_tagged) {
    return VectorField(ScalarField::zeros(grid, real_tagged), ScalarField::zeros(grid, real_tagged));
}

const ScalarField& VectorField::operator[](int axis) const {
    if (axis == 1) return x1_;
    if (axis == 2) return x2_;
    throw std::invalid_argument("vector component must be 1 or 2");
}

ScalarField& VectorField::operator[](int axis) {
    if (axis == 1) return x1_;
    if (axis == 2) return x2_;
    throw std::invalid_argument("vector component must be 1 or 2");
}

VectorField& VectorField::operator+=(const VectorField& other) {
    x1_ += other.x1_;
    x2_ += other.x2_;
    return *this;
}

VectorField& VectorField::operator*=(double c) {
    x1_ *= c;
    x2_ *= c;
    return *this;
}

double VectorField::l2_norm() const { return std::hypot(x1_.l2_norm(), x2_.l2_norm()); }

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a += -1.0 * b; }
VectorField operator*(double c, VectorField a) { return a *= c; }

}  // namespace mkg
