#include <cmath>
#include <stdexcept>
#include <string>

#include "mkg/spectral.hpp"

namespace mkg {

Grid2D::Grid2D(int n, double length) : n_(n), length_(length) {
    if (n < 8 || (n & (n - 1)) != 0)
        throw std::invalid_argument("grid size must be a power of two >= 8, got " + std::to_string(n));
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("grid period must be positive and finite");
}

double Wavevector::norm() const noexcept { return std::sqrt(norm2()); }

}  // namespace mkg
