#include <cmath>
#include <stdexcept>

#include "mkg/dynamics.hpp"
#include "mkg/elliptic.hpp"
#include "mkg/errors.hpp"

namespace mkg {
namespace {

State advance(const State& y, double c, const StateRate& k) {
    return State{y.phi + c * k.phi, y.phi_t + c * k.phi_t, y.a + c * k.a, y.a_t + c * k.a_t, y.a0 + c * k.a0,
                 y.time};
}

StateRate combine(const StateRate& k1, const StateRate& k2, const StateRate& k3, const StateRate& k4) {
    auto mix = [](const auto& x1, const auto& x2, const auto& x3, const auto& x4) {
        return (1.0 / 6.0) * (x1 + 2.0 * x2 + 2.0 * x3 + x4);
    };
    return {mix(k1.phi, k2.phi, k3.phi, k4.phi), mix(k1.phi_t, k2.phi_t, k3.phi_t, k4.phi_t),
            mix(k1.a, k2.a, k3.a, k4.a), mix(k1.a_t, k2.a_t, k3.a_t, k4.a_t), mix(k1.a0, k2.a0, k3.a0, k4.a0)};
}

bool finite(const State& s) {
    return s.phi.all_finite() && s.phi_t.all_finite() && s.a[1].all_finite() && s.a[2].all_finite() &&
           s.a_t[1].all_finite() && s.a_t[2].all_finite() && s.a0.all_finite();
}

}  // namespace

std::string to_string(Formulation f) { return f == Formulation::direct ? "direct" : "nullform"; }

Formulation parse_formulation(const std::string& name) {
    if (name == "direct") return Formulation::direct;
    if (name == "nullform") return Formulation::nullform;
    throw std::invalid_argument("unknown formulation '" + name + "' (expected direct or nullform)");
}

void SimConfig::validate() const {
    Grid2D check(n, length);
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be non-negative");
    if (data.band < 0 || data.band > check.band())
        throw std::invalid_argument("band must lie in [0, n/3] = [0, " + std::to_string(check.band()) + "]");
    if (monitor_stride < 1) throw std::invalid_argument("monitor_stride must be at least 1");
}

State step_rk4(const State& y, double dt, Formulation formulation) {
    auto stage = [&](const State& x, int index) {
        StateRate k = rhs(x, formulation);
        if (!k.all_finite()) throw BlowupDetected(index, y.time);
        return k;
    };
    const StateRate k1 = stage(y, 1);
    const StateRate k2 = stage(advance(y, 0.5 * dt, k1), 2);
    const StateRate k3 = stage(advance(y, 0.5 * dt, k2), 3);
    const StateRate k4 = stage(advance(y, dt, k3), 4);
    State next = advance(y, dt, combine(k1, k2, k3, k4));
    if (!finite(next)) throw BlowupDetected(5, y.time);
    next.time = y.time + dt;
    return next;
}

MonitorRow monitor(const State& state, const DataSpec& data) {
    return {state.time,
            charge(state),
            energy(state),
            gauge_divergence(state),
            a0_residual(state),
            sobolev_norm(state.phi, data.s, OperatorKind::inhomogeneous),
            std::hypot(sobolev_norm(state.a[1], data.sp, OperatorKind::inhomogeneous),
                       sobolev_norm(state.a[2], data.sp, OperatorKind::inhomogeneous))};
}

int step_count(double t_end, double dt) {
    if (t_end <= 0.0) return 0;
    return static_cast<int>(std::ceil(t_end / dt - 1e-9));
}

SimulationResult evolve(const State& initial, const SimConfig& cfg, int steps, const MonitorSink& sink) {
    SimulationResult result{initial, {}};
    auto record = [&](const State& s) {
        result.monitors.push_back(monitor(s, cfg.data));
        if (sink) sink(result.monitors.back());
    };
    record(result.final_state);
    if (steps <= 0) return result;
    const double dt = cfg.t_end / steps;
    for (int step = 1; step <= steps; ++step) {
        result.final_state = step_rk4(result.final_state, dt, cfg.formulation);
        if (step == steps) result.final_state.time = cfg.t_end;
        if (step % cfg.monitor_stride == 0 || step == steps) record(result.final_state);
    }
    return result;
}

SimulationResult simulate(const SimConfig& cfg, const MonitorSink& sink) {
    return evolve(make_initial_data(cfg), cfg, step_count(cfg.t_end, cfg.dt), sink);
}

}  // namespace mkg
