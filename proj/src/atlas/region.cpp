#include "mkg/atlas/region.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace mkg::atlas {

namespace {

struct Line {
    Rational a, b, c;  // a s + b s' + c = 0
};

const std::array<Line, 3> kBoundaries{{
    {Rational(2), Rational(1), Rational(-3, 2)},
    {Rational(1), Rational(-2), Rational(-1, 4)},
    {Rational(4), Rational(-1), Rational(-3, 2)},
}};

const Rational kOffBoundary(1, 256);  // (1/16)^2

constexpr std::int64_t kScale = 512;
constexpr std::int64_t kMargin = 48;

std::int64_t pixels(const Rational& x) {
    const Rational px = x * Rational(kScale);
    if (px.denominator() != 1) throw std::logic_error("coordinate does not land on a pixel: " + to_fraction(x));
    return px.numerator();
}

std::int64_t px_x(const Rational& s) { return kMargin + pixels(s); }
std::int64_t px_y(const Rational& sp) { return kMargin + kScale - pixels(sp); }

}  // namespace

Rational boundary_distance_squared(const Rational& s, const Rational& sp) {
    std::optional<Rational> best;
    for (const auto& l : kBoundaries) {
        const Rational v = l.a * s + l.b * sp + l.c;
        const Rational d2 = v * v / (l.a * l.a + l.b * l.b);
        if (!best || d2 < *best) best = d2;
    }
    return *best;
}

int RegionScan::off_boundary_count() const {
    return static_cast<int>(std::count_if(points.begin(), points.end(), [](const auto& p) { return p.off_boundary; }));
}

int RegionScan::off_boundary_disagreements() const {
    return static_cast<int>(
        std::count_if(points.begin(), points.end(), [](const auto& p) { return p.off_boundary && !p.agree(); }));
}

int RegionScan::disagreements() const {
    return static_cast<int>(std::count_if(points.begin(), points.end(), [](const auto& p) { return !p.agree(); }));
}

bool RegionScan::agreement_met() const { return off_boundary_disagreements() == 0; }

RegionScan region_scan(const Rational& step, unsigned threads, const CatalogOptions& options) {
    if (step != Rational(1, 32) && step != Rational(1, 64) && step != Rational(1, 128))
        throw std::invalid_argument("region step must be 1/32, 1/64 or 1/128, got " + to_fraction(step));
    const auto per_axis = step.denominator();

    RegionScan scan;
    scan.step = step;
    scan.points.resize(static_cast<std::size_t>(per_axis * per_axis));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < scan.points.size(); idx = next++) {
            const auto i = static_cast<std::int64_t>(idx) / per_axis;
            const auto j = static_cast<std::int64_t>(idx) % per_axis;
            ScanPoint& p = scan.points[idx];
            p.s = step * Rational(i + 1);
            p.sp = step * Rational(j + 1);
            p.closed_form = closed_form_region(p.s, p.sp);
            p.witness = find_thetas(p.s, p.sp, options);
            p.off_boundary = !(boundary_distance_squared(p.s, p.sp) < kOffBoundary);
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return scan;
}

void write_scan_csv(std::ostream& out, const RegionScan& scan) {
    out << "s,sp,closed_form,scan_feasible,theta0_q,theta0_m,theta1_q,theta1_m,agree\n";
    for (const auto& p : scan.points) {
        out << to_fraction(p.s) << ',' << to_fraction(p.sp) << ',' << (p.closed_form ? 1 : 0) << ','
            << (p.scan_feasible() ? 1 : 0) << ',';
        if (p.witness)
            out << to_fraction(p.witness->theta0.q()) << ',' << p.witness->theta0.m() << ','
                << to_fraction(p.witness->theta1.q()) << ',' << p.witness->theta1.m();
        else
            out << ",,,";
        out << ',' << (p.agree() ? 1 : 0) << '\n';
    }
}

void write_scan_svg(std::ostream& out, const RegionScan& scan) {
    const std::int64_t size = kScale + 2 * kMargin;
    const std::int64_t half = pixels(scan.step) / 2;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
        << size << ' ' << size << "\">\n";
    out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kScale << "\" height=\"" << kScale
        << "\" fill=\"white\" stroke=\"black\"/>\n";
    out << "<g stroke=\"none\">\n";
    for (const auto& p : scan.points) {
        const char* fill = nullptr;
        if (p.scan_feasible() && p.closed_form)
            fill = "#7fb3d5";
        else if (p.scan_feasible())
            fill = "#f5b041";
        else if (p.closed_form)
            fill = "#e74c3c";
        if (!fill) continue;
        out << "<rect x=\"" << px_x(p.s) - half << "\" y=\"" << px_y(p.sp) - half << "\" width=\"" << 2 * half
            << "\" height=\"" << 2 * half << "\" fill=\"" << fill << "\"/>\n";
    }
    out << "</g>\n";
    // s' = 3/2 - 2s, s' = s/2 - 1/8, s' = 4s - 3/2 clipped to the unit square.
    const std::array<std::array<Rational, 4>, 3> segments{{
        {Rational(1, 4), Rational(1), Rational(3, 4), Rational(0)},
        {Rational(1, 4), Rational(0), Rational(1), Rational(3, 8)},
        {Rational(3, 8), Rational(0), Rational(5, 8), Rational(1)},
    }};
    for (const auto& seg : segments)
        out << "<line x1=\"" << px_x(seg[0]) << "\" y1=\"" << px_y(seg[1]) << "\" x2=\"" << px_x(seg[2]) << "\" y2=\""
            << px_y(seg[3]) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kMargin + kScale / 2 << "\" y=\"" << size - 12
        << "\" font-size=\"20\" text-anchor=\"middle\">s</text>\n";
    out << "<text x=\"16\" y=\"" << kMargin + kScale / 2 << "\" font-size=\"20\" text-anchor=\"middle\">s\xe2\x80\xb2</text>\n";
    for (const auto& [v, label] : {std::pair{Rational(0), "0"}, std::pair{Rational(1, 2), "1/2"}, std::pair{Rational(1), "1"}}) {
        out << "<text x=\"" << px_x(v) << "\" y=\"" << kMargin + kScale + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << label << "</text>\n";
        out << "<text x=\"" << kMargin - 6 << "\" y=\"" << px_y(v) + 4 << "\" font-size=\"12\" text-anchor=\"end\">"
            << label << "</text>\n";
    }
    out << "</svg>\n";
}

void write_scan_files(const std::filesystem::path& dir, const RegionScan& scan) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    const auto write = [&](const std::filesystem::path& path, auto&& emit) {
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
        emit(f);
        f.flush();
        if (!f) throw std::runtime_error("write failed: " + path.string());
    };
    write(dir / "region.csv", [&](std::ostream& o) { write_scan_csv(o, scan); });
    write(dir / "region.svg", [&](std::ostream& o) { write_scan_svg(o, scan); });
}

}  // namespace mkg::atlas
