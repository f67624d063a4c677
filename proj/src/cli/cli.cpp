#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mkg/atlas/region.hpp"
#include "mkg/cli.hpp"
#include "mkg/errors.hpp"
#include "mkg/field_io.hpp"
#include "mkg/reformulation.hpp"

namespace mkg::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kIdentityTolerance = 1e-10;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

struct Options {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> n;
    std::string formulation;
    std::string step = "1/64";
    int refinements = 3;
    int samples = 10;
    unsigned threads = 0;
    bool non_div_free = false;
    std::vector<std::string> exponents;
};

RunConfig resolve_config(const Options& o) {
    RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
    if (o.seed) cfg.sim.seed = *o.seed;
    if (o.n) cfg.sim.n = *o.n;
    if (!o.formulation.empty()) {
        try {
            cfg.sim.formulation = parse_formulation(o.formulation);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("--formulation: ") + e.what());
        }
    }
    if (!o.out.empty()) cfg.out = o.out;
    try {
        cfg.sim.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

fs::path prepare_out(const RunConfig& cfg, const char* fallback) {
    const fs::path dir = cfg.out.value_or(fallback);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

void dump_state(const fs::path& dir, const std::string& tag, const State& s) {
    const fs::path sub = dir / "snapshots";
    fs::create_directories(sub);
    const std::vector<std::pair<std::string, const ScalarField*>> fields{
        {"phi", &s.phi},     {"phi_t", &s.phi_t}, {"a1", &s.a[1]}, {"a2", &s.a[2]},
        {"a_t1", &s.a_t[1]}, {"a_t2", &s.a_t[2]}, {"a0", &s.a0}};
    for (const auto& [name, field] : fields) write_field(sub / (tag + "_" + name + ".field"), *field, name);
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
    const RunConfig cfg = resolve_config(o);
    const fs::path dir = prepare_out(cfg, "mkg_out");
    const fs::path csv_path = dir / "monitor.csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open " + csv_path.string());
    write_monitor_header(csv);

    const State initial = make_initial_data(cfg.sim);
    if (cfg.snapshots) dump_state(dir, "initial", initial);
    const int steps = step_count(cfg.sim.t_end, cfg.sim.dt);
    int rows = 0;
    try {
        const SimulationResult result = evolve(initial, cfg.sim, steps, [&](const MonitorRow& row) {
            write_monitor_row(csv, row);
            csv.flush();
            ++rows;
        });
        if (cfg.snapshots) dump_state(dir, "final", result.final_state);
    } catch (const BlowupDetected& e) {
        err << "blow-up: " << e.what() << " (stage " << e.stage() << ", t = " << e.time() << "); " << rows
            << " monitor rows kept in " << csv_path.string() << "\n";
        return exit_blowup;
    }
    if (!csv) throw std::runtime_error("write failed: " + csv_path.string());
    out << "simulate: " << steps << " steps of dt = " << (steps > 0 ? cfg.sim.t_end / steps : 0.0) << " ("
        << to_string(cfg.sim.formulation) << "), " << rows << " monitor rows -> " << csv_path.string() << "\n";
    return exit_ok;
}

int cmd_check_estimate(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.exponents.size() != 6) {
        err << "check-estimate needs six exponents s0 s1 s2 b0 b1 b2\n";
        return exit_usage;
    }
    std::vector<atlas::EpsRational> v;
    try {
        for (const auto& text : o.exponents) v.push_back(atlas::EpsRational::parse(text));
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
    const auto report = atlas::check_atlas({v[0], v[1], v[2], v[3], v[4], v[5], "cli"});
    out << "s0=" << v[0] << " s1=" << v[1] << " s2=" << v[2] << " b0=" << v[3] << " b1=" << v[4] << " b2=" << v[5]
        << "\n";
    for (const auto& c : report.conditions)
        out << "  (" << c.id << ") " << std::left << std::setw(40) << c.relation << " margin " << std::setw(14)
            << atlas::to_string(c.margin) << (c.pass ? "pass" : "FAIL") << "\n";
    out << (report.pass ? "estimate holds\n" : "estimate fails\n");
    return report.pass ? exit_ok : exit_check_failed;
}

int cmd_region(const Options& o, std::ostream& out, std::ostream& err) {
    atlas::Rational step;
    try {
        const auto parsed = atlas::EpsRational::parse(o.step);
        if (parsed.m() != 0) throw std::invalid_argument("step must be a plain rational");
        step = parsed.q();
        const auto scan = atlas::region_scan(step, o.threads);
        try {
            atlas::write_scan_files(o.out.empty() ? fs::path("region_out") : fs::path(o.out), scan);
        } catch (const std::exception& e) {
            err << e.what() << "\n";
            return exit_usage;
        }
        int feasible = 0;
        for (const auto& p : scan.points) feasible += p.scan_feasible();
        const int off = scan.off_boundary_count();
        const int off_bad = scan.off_boundary_disagreements();
        out << "region: " << scan.points.size() << " points at step " << atlas::to_fraction(step) << ", " << feasible
            << " feasible\n";
        out << "off-boundary agreement: " << off - off_bad << "/" << off << " ("
            << (off == 0 ? 100.0 : 100.0 * (off - off_bad) / off) << "%)\n";
        out << "disagreements within 1/16 of the boundary lines: " << scan.disagreements() - off_bad << "\n";
        for (const auto& p : scan.points)
            if (!p.agree())
                out << "  disagree at s=" << atlas::to_fraction(p.s) << " s'=" << atlas::to_fraction(p.sp)
                    << " closed_form=" << p.closed_form << " scan=" << p.scan_feasible()
                    << (p.off_boundary ? " (off-boundary)" : "") << "\n";
        return scan.agreement_met() ? exit_ok : exit_check_failed;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
}

// Relative L2 error, with the reference norm floored at 1.
double rel(const ScalarField& a, const ScalarField& b) { return (a - b).l2_norm() / std::max(1.0, b.l2_norm()); }

std::vector<std::pair<std::string, double>> operator_suite(std::uint64_t seed, int n) {
    const Grid2D g(n);
    const ScalarField f = random_band_limited(g, seed, 0, 1.0, 1.0, g.band(), true);
    const ScalarField mean_free = f - ScalarField::constant(g, f.mean().real(), true);
    const VectorField v(random_band_limited(g, seed, 2, 1.0, 1.0, g.band(), true),
                        random_band_limited(g, seed, 3, 1.0, 1.0, g.band(), true));
    const VectorField pv = leray(v);
    const VectorField ppv = leray(pv);
    const ScalarField rr = riesz(riesz(mean_free, 1), 1) + riesz(riesz(mean_free, 2), 2);
    return {
        {"leray output is divergence-free", divergence(pv).l2_norm() / std::max(1.0, v[1].l2_norm() + v[2].l2_norm())},
        {"leray is idempotent", std::max(rel(ppv[1], pv[1]), rel(ppv[2], pv[2]))},
        {"R1^2 + R2^2 = -1 on mean-free data", rel(rr, -1.0 * mean_free)},
        {"d1 d1 + d2 d2 = laplacian", rel(partial(partial(f, 1), 1) + partial(partial(f, 2), 2), laplacian(f))},
        {"inv_laplacian inverts laplacian", rel(inv_laplacian(laplacian(mean_free)), mean_free)},
    };
}

int cmd_identities(const Options& o, std::ostream& out, std::ostream& err) {
    const int n = o.n.value_or(64);
    const std::uint64_t seed = o.seed.value_or(1);
    if (n < 8 || (n & (n - 1)) != 0) {
        err << "--n must be a power of two >= 8\n";
        return exit_usage;
    }
    if (o.samples < 1) {
        err << "--samples must be positive\n";
        return exit_usage;
    }
    const IdentityReport r = check_identities(seed, n, o.samples, !o.non_div_free);
    bool ok = true;
    auto line = [&](const std::string& what, double value) {
        const bool pass = value <= kIdentityTolerance;
        ok = ok && pass;
        out << "  " << std::left << std::setw(44) << what << sci(value) << (pass ? "  ok" : "  FAIL") << "\n";
    };
    out << "identities: n = " << n << ", seed = " << seed << ", " << r.samples << " samples"
        << (o.non_div_free ? ", A not projected" : "") << "\n";
    line("current term vs null form", r.current_error);
    line("transport term vs null form", r.transport_error);
    for (const auto& [what, value] : operator_suite(seed, n)) line(what, value);
    out << (ok ? "all identities hold to 1e-10\n" : "identity check failed\n");
    return ok ? exit_ok : exit_check_failed;
}

int cmd_convergence(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.refinements < 3) {
        err << "--refinements must be at least 3\n";
        return exit_usage;
    }
    const RunConfig cfg = resolve_config(o);
    ConvergenceTable table;
    try {
        table = convergence_study(cfg.sim, o.refinements);
    } catch (const BlowupDetected& e) {
        err << "blow-up: " << e.what() << "\n";
        return exit_blowup;
    }
    std::ostringstream csv;
    csv << "steps,dt,charge_drift,energy_drift,gauge_div,a0_residual\n";
    out << "convergence: n = " << cfg.sim.n << ", t_end = " << cfg.sim.t_end << ", " << to_string(cfg.sim.formulation)
        << "\n";
    out << "  steps        dt    charge     energy      gauge    a0_res\n";
    for (const auto& l : table.levels) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", double(l.steps), l.dt, l.charge_drift,
                      l.energy_drift, l.gauge_div, l.a0_residual);
        csv << buf;
        std::snprintf(buf, sizeof buf, "  %5d  %.2e  %.2e  %.2e  %.2e  %.2e\n", l.steps, l.dt, l.charge_drift,
                      l.energy_drift, l.gauge_div, l.a0_residual);
        out << buf;
    }
    out << "  Richardson orders\n";
    for (const auto& r : table.orders) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "  %-6s level %d  %.3e  %.3e  order %.3f\n", r.field.c_str(), r.level,
                      r.coarse_difference, r.fine_difference, r.order);
        out << buf;
    }
    if (cfg.out) {
        const fs::path dir = prepare_out(cfg, "");
        std::ofstream f(dir / "convergence.csv");
        f << csv.str();
        if (!f) throw std::runtime_error("write failed: " + (dir / "convergence.csv").string());
    }
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"mkglab: Maxwell-Klein-Gordon laboratory"};
    app.require_subcommand(1);
    Options o;

    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "JSON configuration file");
        sub->add_option("--out", o.out, "output directory");
        sub->add_option("--seed", o.seed, "random seed (overrides config)");
        sub->add_option("--n", o.n, "grid size (overrides config)");
        sub->add_option("--formulation", o.formulation, "direct or nullform (overrides config)");
    };
    auto* simulate = app.add_subcommand("simulate", "run a simulation and write monitor.csv");
    add_run_flags(simulate);
    auto* convergence = app.add_subcommand("convergence", "step-refinement study");
    add_run_flags(convergence);
    convergence->add_option("--refinements", o.refinements, "number of step halvings plus one (>= 3)");

    auto* check = app.add_subcommand("check-estimate", "check a bilinear product estimate s0 s1 s2 b0 b1 b2");
    check->add_option("exponents", o.exponents, "six exponents such as 1/2, 0.25 or 1/4+1eps")->expected(6);
    check->allow_extras(false);

    auto* region = app.add_subcommand("region", "scan the (s, s') square and compare with the closed form");
    region->add_option("--step", o.step, "grid step: 1/32, 1/64 or 1/128");
    region->add_option("--out", o.out, "output directory for region.csv and region.svg");
    region->add_option("--threads", o.threads, "worker threads (0 = hardware)");

    auto* identities = app.add_subcommand("identities", "check the null-form identities and operator properties");
    identities->add_option("--seed", o.seed, "random seed");
    identities->add_option("--n", o.n, "grid size (power of two)");
    identities->add_option("--samples", o.samples, "number of random samples");
    identities->add_flag("--non-div-free", o.non_div_free, "skip the Leray projection of A (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*simulate) return cmd_simulate(o, out, err);
        if (*check) return cmd_check_estimate(o, out, err);
        if (*region) return cmd_region(o, out, err);
        if (*identities) return cmd_identities(o, out, err);
        if (*convergence) return cmd_convergence(o, out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_usage;
    } catch (const SolverDiverged& e) {
        err << "runtime failure: " << e.what() << "\n";
        return exit_blowup;
    } catch (const GaugeViolation& e) {
        err << "runtime failure: " << e.what() << "\n";
        return exit_blowup;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace mkg::cli
