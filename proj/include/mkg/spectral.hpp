#pragma once

// Periodic grids, dual physical/spectral fields and Fourier multipliers.
//
// Conventions
//   * x1 is the first (slow) array axis, x2 the second; index = i1 * n + i2.
//   * Spectral coefficients satisfy f(x) = sum_k fhat(k) exp(i k.x), so a unit
//     plane wave has a unit coefficient regardless of n.
//   * Odd symbols (derivatives, Riesz transforms) vanish on the Nyquist line of
//     their own axis, which keeps real fields real.
//   * Homogeneous negative-order symbols send the k = 0 mode to zero.

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace mkg {

using Complex = std::complex<double>;

class Grid2D {
public:
    /// n must be a power of two, n >= 8; length is the period L.
    explicit Grid2D(int n, double length = 2.0 * std::numbers::pi);

    int n() const noexcept { return n_; }
    double length() const noexcept { return length_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(n_) * n_; }
    double spacing() const noexcept { return length_ / n_; }
    double coordinate(int index) const noexcept { return index * spacing(); }

    /// Signed mode number of an array index, in [-n/2, n/2).
    int mode(int index) const noexcept { return index < n_ / 2 ? index : index - n_; }
    int index_of_mode(int m) const noexcept { return m >= 0 ? m : m + n_; }
    double wavenumber(int index) const noexcept { return mode(index) * base_wavenumber(); }
    double base_wavenumber() const noexcept { return 2.0 * std::numbers::pi / length_; }

    /// Largest |mode| kept by the 2/3 rule.
    int band() const noexcept { return n_ / 3; }

    bool operator==(const Grid2D& other) const noexcept {
        return n_ == other.n_ && length_ == other.length_;
    }

private:
    int n_;
    double length_;
};

enum class Representation { physical, spectral };

/// A grid function held in one representation at a time. Real-tagged fields
/// carry exactly zero imaginary part in physical space.
class ScalarField {
public:
    ScalarField(Grid2D grid, Representation rep, std::vector<Complex> values, bool real_tagged);

    static ScalarField zeros(const Grid2D& grid, bool real_tagged,
                             Representation rep = Representation::spectral);
    static ScalarField constant(const Grid2D& grid, Complex value, bool real_tagged);
    /// exp(i (m1 x1 + m2 x2) 2pi/L) scaled by amplitude.
    static ScalarField plane_wave(const Grid2D& grid, int m1, int m2, Complex amplitude = 1.0);

    /// Samples f(x1, x2) at the grid points.
    template <class F>
    static ScalarField sample(const Grid2D& grid, F&& f, bool real_tagged) {
        std::vector<Complex> v(grid.size());
        for (int i = 0; i < grid.n(); ++i)
            for (int j = 0; j < grid.n(); ++j)
                v[static_cast<std::size_t>(i) * grid.n() + j] =
                    Complex(f(grid.coordinate(i), grid.coordinate(j)));
        return ScalarField(grid, Representation::physical, std::move(v), real_tagged);
    }

    const Grid2D& grid() const noexcept { return grid_; }
    Representation representation() const noexcept { return rep_; }
    bool real_tagged() const noexcept { return real_; }
    std::span<const Complex> values() const& noexcept { return values_; }
    std::span<const Complex> values() const&& = delete;

    /// Value at array position (i1, i2) in the current representation.
    Complex at(int i1, int i2) const {
        return values_[static_cast<std::size_t>(i1) * grid_.n() + i2];
    }
    /// Spectral coefficient of mode (m1, m2); converts if needed.
    Complex coefficient(int m1, int m2) const;

    ScalarField to_spectral() const;
    ScalarField to_physical() const;
    ScalarField in(Representation rep) const {
        return rep == Representation::spectral ? to_spectral() : to_physical();
    }

    ScalarField conj() const;
    ScalarField real_part() const;
    ScalarField imag_part() const;
    /// Same values with the real tag set; imaginary parts are dropped.
    ScalarField as_real() const;

    ScalarField& operator+=(const ScalarField& other);
    ScalarField& operator-=(const ScalarField& other);
    ScalarField& operator*=(double c);
    ScalarField& operator*=(Complex c);

    /// (integral of |f|^2 over the period cell)^(1/2).
    double l2_norm() const;
    Complex mean() const;
    double max_abs() const noexcept;
    bool all_finite() const noexcept;

private:
    Grid2D grid_;
    Representation rep_;
    bool real_;
    std::vector<Complex> values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a);
ScalarField operator*(double c, ScalarField a);
ScalarField operator*(Complex c, ScalarField a);

/// Relative max-norm difference ||a - b||_inf / max(||b||_inf, floor).
double relative_difference(const ScalarField& a, const ScalarField& b, double floor = 1e-300);

class VectorField {
public:
    VectorField(ScalarField x1, ScalarField x2);
    static VectorField zeros(const Grid2D& grid, bool real_tagged = true);

    const Grid2D& grid() const noexcept { return x1_.grid(); }
    /// axis is 1 or 2.
    const ScalarField& operator[](int axis) const;
    ScalarField& operator[](int axis);

    VectorField& operator+=(const VectorField& other);
    VectorField& operator*=(double c);
    double l2_norm() const;

private:
    ScalarField x1_;
    ScalarField x2_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double c, VectorField a);

struct Wavevector {
    double k1;
    double k2;
    int m1;
    int m2;
    bool nyquist1;
    bool nyquist2;

    double norm2() const noexcept { return k1 * k1 + k2 * k2; }
    double norm() const noexcept;
};

using Symbol = std::function<Complex(const Wavevector&)>;

/// A Fourier multiplier. The symbol is evaluated on k != 0 only; the zero mode
/// is always taken from zero_mode. real_preserving declares m(-k) = conj m(k),
/// in which case real-tagged inputs give real-tagged outputs.
struct Multiplier {
    Symbol symbol;
    Complex zero_mode{0.0};
    bool real_preserving = true;
};

/// Rejects non-finite symbol values with std::invalid_argument.
ScalarField apply_multiplier(const ScalarField& f, const Multiplier& m);

/// d/dx_axis, axis in {1, 2}.
ScalarField partial(const ScalarField& f, int axis);
ScalarField laplacian(const ScalarField& f);
/// Symbol i k_axis / |k|.
ScalarField riesz(const ScalarField& f, int axis);

enum class OperatorKind { homogeneous, inhomogeneous };

/// D^alpha (|k|^alpha) or Lambda^alpha ((1 + |k|^2)^(alpha/2)).
ScalarField frac_op(const ScalarField& f, double alpha, OperatorKind kind);

/// Zero-mean solution of Delta u = f. Throws MeanNotZero if |mean f| > 1e-12 (1 + ||f||_inf).
ScalarField inv_laplacian(const ScalarField& f);

/// Zeroes every mode with max(|m1|, |m2|) > n/3.
ScalarField truncate(const ScalarField& f);

ScalarField divergence(const VectorField& v);
VectorField gradient(const ScalarField& f);

/// P X_j = R_k (R_j X_k - R_k X_j).
VectorField leray(const VectorField& v);

/// Pointwise product of two or three fields, de-aliased: inputs are truncated
/// to the 2/3 band, multiplied on a grid fine enough that no product mode
/// aliases back into the band, and the result is truncated to the band.
ScalarField dealias_product(std::span<const ScalarField> factors);
ScalarField dealias_product(const ScalarField& a, const ScalarField& b);
ScalarField dealias_product(const ScalarField& a, const ScalarField& b, const ScalarField& c);

}  // namespace mkg
