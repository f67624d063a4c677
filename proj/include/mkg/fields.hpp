#pragma once

// Field-theoretic quantities of the Coulomb-gauge system: covariant
// derivatives D_a phi = (d_a + i A_a) phi, the current J, field strength F,
// charge, energy and Sobolev norms. Index 0 is time, 1 and 2 are space.

#include "mkg/spectral.hpp"

namespace mkg {

struct State {
    ScalarField phi;
    ScalarField phi_t;
    VectorField a;
    VectorField a_t;
    ScalarField a0;
    double time = 0.0;

    static State zeros(const Grid2D& grid);
    const Grid2D& grid() const noexcept { return phi.grid(); }
};

struct Current {
    ScalarField j0;
    ScalarField j1;
    ScalarField j2;
};

/// F_ab = d_a A_b - d_b A_a for a < b.
struct FieldStrength {
    ScalarField f01;
    ScalarField f02;
    ScalarField f12;
};

/// alpha in {0, 1, 2}.
ScalarField covariant_d(const State& state, int alpha);

/// J_a = -Im(phi conj(D_a phi)), evaluated without intermediate truncation.
Current current(const State& state);

/// Spatial current J_j for given phi and A_j alone.
ScalarField spatial_current(const ScalarField& phi, const ScalarField& a_j, int axis);

/// Q_jk(u, v) = d_j u d_k v - d_k u d_j v; throws std::invalid_argument if j == k.
ScalarField null_form(const ScalarField& u, const ScalarField& v, int j, int k);

/// Integral of J_0 over the period cell.
double charge(const State& state);

FieldStrength field_strength(const State& state);

/// Integral of (|D_0 phi|^2 + |D_1 phi|^2 + |D_2 phi|^2 + F01^2 + F02^2 + F12^2) / 2.
double energy(const State& state);

/// || D^s f ||_2 or || Lambda^s f ||_2 by Parseval.
double sobolev_norm(const ScalarField& f, double s, OperatorKind kind);

/// max(||div a||_2, ||div a_t||_2).
double gauge_divergence(const State& state);

/// gauge_divergence <= tol (1 + ||a||_2 + ||a_t||_2).
bool satisfies_coulomb_gauge(const State& state, double tol = 1e-8);

}  // namespace mkg
