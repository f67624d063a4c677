#include <cstdio>
#include <ostream>

#include "mkg/dynamics.hpp"

namespace mkg {
namespace {

void put(std::ostream& out, double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << buf;
}

}  // namespace

void write_monitor_header(std::ostream& out) { out << "t,charge,energy,gauge_div,a0_residual,hs_phi,hsp_a\n"; }

void write_monitor_row(std::ostream& out, const MonitorRow& row) {
    const double values[] = {row.t, row.charge, row.energy, row.gauge_div, row.a0_residual, row.hs_phi, row.hsp_a};
    for (std::size_t i = 0; i < std::size(values); ++i) {
        if (i) out << ',';
        put(out, values[i]);
    }
    out << '\n';
}

}  // namespace mkg
