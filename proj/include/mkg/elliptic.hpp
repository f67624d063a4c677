#pragma once

// The temporal potential: A0 from (Delta - |phi|^2) A0 = -Im(phi conj phi_t),
// its time derivative B0 = Delta^-1 d_j J_j, and the residual of the former.

#include "mkg/fields.hpp"
#include "mkg/spectral.hpp"

namespace mkg {

struct SolverOptions {
    double tolerance = 1e-10;  ///< relative residual
    int max_iter = 0;          ///< 0 means 10 n
};

/// Preconditioned conjugate gradients on -Delta + |phi|^2 within the 2/3 band.
/// phi == 0 falls back to the zero-mean solution of Delta a0 = rhs.
/// Throws SolverDiverged when max_iter is exhausted.
ScalarField solve_a0(const ScalarField& phi, const ScalarField& phi_t, const SolverOptions& options = {});

/// Solves (-Delta + potential) u = rhs for a real potential >= 0, products de-aliased.
ScalarField solve_screened_poisson(const ScalarField& potential, const ScalarField& rhs,
                                   const SolverOptions& options = {});

/// B0 = Delta^-1 d_j (-Im(phi conj d_j phi) + |phi|^2 A_j). phi_t does not enter.
ScalarField compute_b0(const ScalarField& phi, const ScalarField& phi_t, const VectorField& a);

/// ||(Delta - |phi|^2) A0 + Im(phi conj phi_t)||_2 / (1 + ||A0||_2 + ||phi||_2^2).
double a0_residual(const State& state);

}  // namespace mkg
