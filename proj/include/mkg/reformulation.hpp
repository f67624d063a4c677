#pragma once

// The algebraic identities that turn the Coulomb-gauge equations into null-form
// equations. Both sides are exposed so they can be compared directly.

#include <cstdint>

#include "mkg/spectral.hpp"

namespace mkg {

/// P(-Im(phi conj d_j phi)).
VectorField projected_current_term(const ScalarField& phi);
/// 2 R^k D^-1 Q_jk(Re phi, Im phi).
VectorField nullform_current_term(const ScalarField& phi);

/// -2i A^j d_j phi.
ScalarField transport_term(const ScalarField& phi, const VectorField& a);
/// -i Q_jk(phi, D^-1 [R^j A^k - R^k A^j]) summed over j != k. Equals transport_term iff div A = 0.
ScalarField nullform_transport_term(const ScalarField& phi, const VectorField& a);

struct IdentityReport {
    int samples = 0;
    double current_error = 0.0;    ///< max relative L2 error of the A-equation identity
    double transport_error = 0.0;  ///< max relative L2 error of the phi-equation identity

    bool passed(double tol = 1e-10) const { return current_error <= tol && transport_error <= tol; }
};

/// Checks both identities on `samples` random band-limited (phi, A) on an n-grid.
/// With div_free = false, A is not projected (negative control).
IdentityReport check_identities(std::uint64_t seed, int n, int samples, bool div_free = true);

}  // namespace mkg
