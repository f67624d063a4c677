#pragma once

// Grid scan of the (s, s') square comparing the theta search with the closed-form region.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mkg/atlas/atlas.hpp"

namespace mkg::atlas {

struct ScanPoint {
    Rational s, sp;
    bool closed_form;
    std::optional<ThetaWitness> witness;
    bool off_boundary;  ///< distance >= 1/16 from all three boundary lines

    bool scan_feasible() const { return witness.has_value(); }
    bool agree() const { return closed_form == scan_feasible(); }
};

struct RegionScan {
    Rational step;
    std::vector<ScanPoint> points;  ///< ordered by s, then s'

    int off_boundary_count() const;
    int off_boundary_disagreements() const;
    int disagreements() const;
    /// Every off-boundary point agrees.
    bool agreement_met() const;
};

/// Squared distance from (s, s') to the nearest of s' = 3/2 - 2s, s' = s/2 - 1/8, s' = 4s - 3/2.
Rational boundary_distance_squared(const Rational& s, const Rational& sp);

/// step must be 1/32, 1/64 or 1/128. Points are k step for k = 1 .. 1/step on each axis.
/// threads = 0 uses the hardware concurrency; the result does not depend on it.
RegionScan region_scan(const Rational& step, unsigned threads = 0, const CatalogOptions& options = {});

void write_scan_csv(std::ostream& out, const RegionScan& scan);
void write_scan_svg(std::ostream& out, const RegionScan& scan);
/// Writes region.csv and region.svg into dir (created if needed); throws std::runtime_error on I/O failure.
void write_scan_files(const std::filesystem::path& dir, const RegionScan& scan);

}  // namespace mkg::atlas
