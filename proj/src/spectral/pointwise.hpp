#pragma once

// Exact evaluation of low-degree polynomial expressions of band-limited fields.
// Inputs are truncated to the 2/3 band and synthesized on an M x M grid with M
// large enough that the expression's modes cannot alias into the band.

#include <array>
#include <cstddef>
#include <vector>

#include "mkg/spectral.hpp"

namespace mkg::detail {

/// Grid size on which a degree-p polynomial of band-limited fields is
/// alias-free inside the band (p <= 3), or has an exact mean (p <= 4).
int padded_size(const Grid2D& grid, int degree);

/// Physical values on the M-grid of the band-truncated field.
std::vector<Complex> lift(const ScalarField& f, int padded);

/// Band-truncated spectral field from physical values on the M-grid.
/// `fine` is used as scratch.
ScalarField project(const Grid2D& grid, std::vector<Complex>& fine, int padded, bool real_tagged);

template <std::size_t N, class Kernel>
std::vector<Complex> evaluate_fine(const std::array<const ScalarField*, N>& inputs, int padded, Kernel&& kernel) {
    std::array<std::vector<Complex>, N> fine;
    for (std::size_t i = 0; i < N; ++i) fine[i] = lift(*inputs[i], padded);
    std::vector<Complex> out(fine[0].size());
    std::array<Complex, N> point;
    for (std::size_t p = 0; p < out.size(); ++p) {
        for (std::size_t i = 0; i < N; ++i) point[i] = fine[i][p];
        out[p] = kernel(point);
    }
    return out;
}

/// T[kernel(inputs)] for a kernel that is a polynomial of total degree <= 3.
template <std::size_t N, class Kernel>
ScalarField pointwise(const std::array<const ScalarField*, N>& inputs, int degree, bool real_tagged,
                      Kernel&& kernel) {
    const Grid2D& grid = inputs[0]->grid();
    for (const auto* f : inputs)
        if (!(f->grid() == grid)) throw std::invalid_argument("fields live on different grids");
    const int padded = padded_size(grid, degree);
    auto fine = evaluate_fine(inputs, padded, kernel);
    return project(grid, fine, padded, real_tagged);
}

/// Exact spatial mean of kernel(inputs) for a polynomial kernel of degree <= 4.
template <std::size_t N, class Kernel>
Complex pointwise_mean(const std::array<const ScalarField*, N>& inputs, int degree, Kernel&& kernel) {
    const int padded = padded_size(inputs[0]->grid(), degree);
    const auto fine = evaluate_fine(inputs, padded, kernel);
    Complex sum = 0.0;
    for (const auto& z : fine) sum += z;
    return sum / static_cast<double>(fine.size());
}

}  // namespace mkg::detail
