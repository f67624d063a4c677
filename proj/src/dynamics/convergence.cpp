#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mkg/dynamics.hpp"

namespace mkg {
namespace {

double sum_squares(std::initializer_list<double> norms) {
    double total = 0.0;
    for (double x : norms) total += x * x;
    return total;
}

ConvergenceLevel run_level(const State& initial, const SimConfig& cfg, int steps) {
    SimConfig level_cfg = cfg;
    level_cfg.monitor_stride = 1;
    SimulationResult run = evolve(initial, level_cfg, steps);
    const MonitorRow& first = run.monitors.front();
    ConvergenceLevel level{steps, cfg.t_end / steps, 0.0, 0.0, 0.0, 0.0, std::move(run.final_state)};
    for (const MonitorRow& row : run.monitors) {
        level.charge_drift = std::max(level.charge_drift, std::abs(row.charge - first.charge) / (1.0 + std::abs(first.charge)));
        level.energy_drift = std::max(level.energy_drift, std::abs(row.energy - first.energy) / std::abs(first.energy));
        level.gauge_div = std::max(level.gauge_div, row.gauge_div);
        level.a0_residual = std::max(level.a0_residual, row.a0_residual);
    }
    return level;
}

}  // namespace

double state_distance(const State& x, const State& y) {
    return std::sqrt(sum_squares({(x.phi - y.phi).l2_norm(), (x.phi_t - y.phi_t).l2_norm(), (x.a - y.a).l2_norm(),
                                  (x.a_t - y.a_t).l2_norm(), (x.a0 - y.a0).l2_norm()}));
}

ConvergenceTable convergence_study(const SimConfig& cfg, int refinements) {
    if (refinements < 3) throw std::invalid_argument("convergence study needs at least 3 refinements");
    cfg.validate();
    if (cfg.t_end <= 0.0) throw std::invalid_argument("convergence study needs t_end > 0");
    const State initial = make_initial_data(cfg);
    const int base = step_count(cfg.t_end, cfg.dt);

    ConvergenceTable table;
    for (int r = 0; r < refinements; ++r) table.levels.push_back(run_level(initial, cfg, base << r));

    using Extract = double (*)(const State&, const State&);
    const std::pair<const char*, Extract> fields[] = {
        {"phi", [](const State& x, const State& y) { return (x.phi - y.phi).l2_norm(); }},
        {"phi_t", [](const State& x, const State& y) { return (x.phi_t - y.phi_t).l2_norm(); }},
        {"a", [](const State& x, const State& y) { return (x.a - y.a).l2_norm(); }},
        {"a_t", [](const State& x, const State& y) { return (x.a_t - y.a_t).l2_norm(); }},
        {"a0", [](const State& x, const State& y) { return (x.a0 - y.a0).l2_norm(); }},
        {"state", [](const State& x, const State& y) { return state_distance(x, y); }},
    };
    for (int r = 0; r + 2 < refinements; ++r) {
        const State& coarse = table.levels[r].final_state;
        const State& mid = table.levels[r + 1].final_state;
        const State& fine = table.levels[r + 2].final_state;
        for (const auto& [name, distance] : fields) {
            const double d1 = distance(coarse, mid);
            const double d2 = distance(mid, fine);
            table.orders.push_back({name, r, d1, d2, std::log2(d1 / d2)});
        }
    }
    return table;
}

}  // namespace mkg
