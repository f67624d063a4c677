#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mkg/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "mkglab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = mkg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("mkglab_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write(const fs::path& path, const std::string& text) {
    std::ofstream(path) << text;
    return path;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"check-estimate", "1", "1"}).code == 1);
    CHECK(run({"check-estimate", "1", "1", "1", "1", "1", "x"}).code == 1);
    CHECK(run({"region", "--step", "1/10"}).code == 1);
    CHECK(run({"identities", "--n", "48"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check-estimate") {
    const auto pass = run({"check-estimate", "1", "1", "1", "1", "1", "1"});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("estimate holds") != std::string::npos);

    const auto fail = run({"check-estimate", "7/30", "7/30", "7/30", "1", "1", "1"});
    CHECK(fail.code == 3);
    CHECK(fail.out.find("(h)") != std::string::npos);
    CHECK(fail.out.find("-1/20") != std::string::npos);

    const auto eps = run({"check-estimate", "1/4+1ε", "1/4", "1/4", "5", "5", "5"});
    CHECK(eps.code == 0);
    CHECK(eps.out.find("s0=1/4+1ε") != std::string::npos);
    CHECK(run({"check-estimate", "1/4+eps", "1/4", "1/4", "5", "5", "5"}).out.find("s0=1/4+1ε") != std::string::npos);
    CHECK(run({"check-estimate", "1/4", "1/4", "1/4", "5", "5", "5"}).code == 3);
}

TEST_CASE("region writes files and reports agreement") {
    const fs::path dir = scratch("region");
    const auto r = run({"region", "--step", "1/32", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("1024 points") != std::string::npos);
    CHECK(r.out.find("(100%)") != std::string::npos);
    REQUIRE(fs::exists(dir / "region.csv"));
    REQUIRE(fs::exists(dir / "region.svg"));
    const std::string svg = slurp(dir / "region.svg");
    std::size_t lines = 0;
    for (auto pos = svg.find("<line"); pos != std::string::npos; pos = svg.find("<line", pos + 1)) ++lines;
    CHECK(lines == 3);

    const fs::path blocker = write(scratch("region_io") / "file", "x");
    CHECK(run({"region", "--step", "1/32", "--out", (blocker / "sub").string()}).code == 1);
}

TEST_CASE("identities") {
    CHECK(run({"identities", "--n", "32", "--samples", "3"}).code == 0);
    CHECK(run({"identities", "--n", "8"}).code == 0);
    const auto control = run({"identities", "--n", "32", "--samples", "3", "--non-div-free"});
    CHECK(control.code == 3);
    CHECK(control.out.find("FAIL") != std::string::npos);
}

TEST_CASE("simulate with t_end = 0 writes one row") {
    const fs::path dir = scratch("sim0");
    const fs::path cfg = write(dir / "c.json", R"({"n": 16, "t_end": 0, "data": {"band": 3}})");
    CHECK(run({"simulate", "--config", cfg.string(), "--out", (dir / "out").string()}).code == 0);
    const std::string csv = slurp(dir / "out" / "monitor.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    CHECK(csv.rfind("t,charge,energy,gauge_div,a0_residual,hs_phi,hsp_a\n", 0) == 0);
}

TEST_CASE("simulate is deterministic and honours overrides") {
    const fs::path dir = scratch("simdet");
    const fs::path cfg = write(dir / "c.json", R"({"n": 16, "dt": 0.05, "t_end": 0.2, "seed": 7, "snapshots": true,
        "data": {"s": 1.5, "sp": 1.5, "amplitude": 0.2, "band": 3}})");
    CHECK(run({"simulate", "--config", cfg.string(), "--out", (dir / "a").string()}).code == 0);
    CHECK(run({"simulate", "--config", cfg.string(), "--out", (dir / "b").string()}).code == 0);
    CHECK(slurp(dir / "a" / "monitor.csv") == slurp(dir / "b" / "monitor.csv"));
    CHECK(fs::exists(dir / "a" / "snapshots" / "final_phi.field"));
    CHECK(run({"simulate", "--config", cfg.string(), "--out", (dir / "c").string(), "--seed", "8"}).code == 0);
    CHECK(slurp(dir / "a" / "monitor.csv") != slurp(dir / "c" / "monitor.csv"));
    CHECK(run({"simulate", "--config", cfg.string(), "--out", (dir / "d").string(), "--formulation", "nullform"}).code ==
          0);
    CHECK(run({"simulate", "--config", cfg.string(), "--formulation", "lorenz"}).code == 1);
}

TEST_CASE("simulate reports blow-up with exit 2 and keeps partial output") {
    const fs::path dir = scratch("blowup");
    const fs::path cfg = write(dir / "c.json", R"({"n": 16, "dt": 5.0, "t_end": 100, "data": {"amplitude": 2.0, "band": 3}})");
    const auto r = run({"simulate", "--config", cfg.string(), "--out", (dir / "out").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("stage") != std::string::npos);
    const std::string csv = slurp(dir / "out" / "monitor.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') >= 2);
}

TEST_CASE("malformed configs exit 1 with a diagnostic") {
    const fs::path dir = scratch("badcfg");
    const auto unknown = run({"simulate", "--config", write(dir / "u.json", R"({"n": 16, "dtt": 0.1})").string()});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("'dtt'") != std::string::npos);

    const auto nested = run({"simulate", "--config", write(dir / "n.json", R"({"data": {"sigma": 1}})").string()});
    CHECK(nested.code == 1);
    CHECK(nested.err.find("'data.sigma'") != std::string::npos);

    const auto syntax = run({"simulate", "--config", write(dir / "s.json", "{\n\"n\": 16,\n\"dt\": }").string()});
    CHECK(syntax.code == 1);
    CHECK(syntax.err.find("line 3") != std::string::npos);

    const auto type = run({"simulate", "--config", write(dir / "t.json", R"({"n": "big"})").string()});
    CHECK(type.code == 1);
    CHECK(type.err.find("'n'") != std::string::npos);

    CHECK(run({"simulate", "--config", write(dir / "v.json", R"({"n": 16, "dt": -1})").string()}).code == 1);
    CHECK(run({"simulate", "--config", (dir / "missing.json").string()}).code == 1);
}

TEST_CASE("convergence verb") {
    const fs::path dir = scratch("conv");
    const fs::path cfg = write(dir / "c.json", R"({"n": 16, "dt": 0.1, "t_end": 0.2, "data": {"band": 3}})");
    const auto r = run({"convergence", "--config", cfg.string(), "--out", (dir / "out").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("order") != std::string::npos);
    CHECK(fs::exists(dir / "out" / "convergence.csv"));
    CHECK(run({"convergence", "--refinements", "2"}).code == 1);
}
