#pragma once

// Time evolution of (phi, phi_t, A, A_t, A0) in the Coulomb gauge, in the
// direct form and in the null-form form, with classical RK4. A0 is carried as
// state and advanced by dA0/dt = B0.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

#include "mkg/fields.hpp"
#include "mkg/spectral.hpp"

namespace mkg {

enum class Formulation { direct, nullform };

std::string to_string(Formulation f);
/// Accepts "direct" and "nullform"; throws std::invalid_argument otherwise.
Formulation parse_formulation(const std::string& name);

/// Spectral shape of random initial data. s labels phi, sp labels A; the time
/// derivatives get one derivative less.
struct DataSpec {
    double s = 1.0;
    double sp = 1.0;
    double amplitude = 0.1;
    int band = 4;
};

struct SimConfig {
    int n = 64;
    double length = 2.0 * std::numbers::pi;
    double dt = 0.02;
    double t_end = 1.0;
    Formulation formulation = Formulation::direct;
    std::uint64_t seed = 1;
    DataSpec data;
    int monitor_stride = 1;

    Grid2D grid() const { return Grid2D(n, length); }
    /// Throws std::invalid_argument on dt <= 0, t_end < 0, band outside [0, n/3], stride < 1.
    void validate() const;
};

/// Time derivative of every State component.
struct StateRate {
    ScalarField phi;
    ScalarField phi_t;
    VectorField a;
    VectorField a_t;
    ScalarField a0;

    bool all_finite() const;
};

struct MonitorRow {
    double t;
    double charge;
    double energy;
    double gauge_div;
    double a0_residual;
    double hs_phi;
    double hsp_a;
};

/// Gaussian coefficients amplitude (1 + |k|^2)^(-(sigma + 1)/2) on max(|m1|, |m2|) <= band.
/// Real fields are made Hermitian. Deterministic in (seed, stream).
ScalarField random_band_limited(const Grid2D& grid, std::uint64_t seed, std::uint64_t stream, double sigma,
                                double amplitude, int band, bool real_tagged);

/// Streams: phi 0, phi_t 1, A 2-3, A_t 4-5. A and A_t are Leray-projected and A0 is solved for.
State make_initial_data(const SimConfig& cfg);

StateRate rhs_direct(const State& state);
/// Throws GaugeViolation if the state is not in the Coulomb gauge.
StateRate rhs_nullform(const State& state);
StateRate rhs(const State& state, Formulation formulation);

/// One classical RK4 step. Throws BlowupDetected naming the first non-finite stage (1-4, 5 for the update).
State step_rk4(const State& state, double dt, Formulation formulation);

MonitorRow monitor(const State& state, const DataSpec& data);

/// Number of uniform steps used to reach t_end with step at most dt.
int step_count(double t_end, double dt);

using MonitorSink = std::function<void(const MonitorRow&)>;

struct SimulationResult {
    State final_state;
    std::vector<MonitorRow> monitors;
};

/// Advances `initial` by `steps` uniform steps to cfg.t_end, monitoring at step 0, every
/// cfg.monitor_stride steps and at the end. Rows reach `sink` as they are produced, so a
/// BlowupDetected leaves the partial history with the caller.
SimulationResult evolve(const State& initial, const SimConfig& cfg, int steps, const MonitorSink& sink = {});
SimulationResult simulate(const SimConfig& cfg, const MonitorSink& sink = {});

struct ConvergenceLevel {
    int steps;
    double dt;
    double charge_drift;  ///< max |Q(t) - Q(0)| / (1 + |Q(0)|)
    double energy_drift;  ///< max |E(t) - E(0)| / |E(0)|
    double gauge_div;     ///< max over the run
    double a0_residual;   ///< max over the run
    State final_state;
};

struct ConvergenceOrder {
    std::string field;
    int level;  ///< index of the coarsest of the three runs
    double coarse_difference;
    double fine_difference;
    double order;
};

struct ConvergenceTable {
    std::vector<ConvergenceLevel> levels;
    std::vector<ConvergenceOrder> orders;
};

/// Runs cfg with N, 2N, ..., 2^(refinements-1) N steps from the same data and reports
/// p = log2(|u_dt - u_dt/2| / |u_dt/2 - u_dt/4|) for phi, phi_t, A, A_t, A0 and the whole state.
/// refinements must be >= 3.
ConvergenceTable convergence_study(const SimConfig& cfg, int refinements);

/// L2 distance over all state components.
double state_distance(const State& x, const State& y);

void write_monitor_header(std::ostream& out);
void write_monitor_row(std::ostream& out, const MonitorRow& row);

}  // namespace mkg
