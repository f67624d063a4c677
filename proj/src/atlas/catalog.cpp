#include <vector>

#include "mkg/atlas/atlas.hpp"

namespace mkg::atlas {

namespace {

const EpsRational kHalf(1, 2);
const EpsRational kEps = EpsRational::eps();

FeasibilityReport predicate(std::string label, std::string relation, EpsRational margin, bool strict) {
    FeasibilityReport r;
    r.label = label;
    const bool pass = strict ? margin.sign() > 0 : margin.sign() >= 0;
    r.add({std::move(label), std::move(relation), margin, strict, pass});
    return r;
}

// Pieces that depend only on (s, s').
void add_point_part(Catalog& c, const EpsRational& s, const EpsRational& sp, const CatalogOptions& o) {
    c.sobolev.push_back({o.big_m, s - kHalf, s - kHalf, "nullA-low"});
    c.sobolev.push_back({EpsRational(1) - sp, sp, o.delta, "cubicA-1"});
    c.sobolev.push_back({-o.delta, s, s, "cubicA-2"});
    c.sobolev.push_back({kHalf - s, s - kHalf, o.big_m, "nullphi-low"});
    if (sp > kHalf) {
        c.sobolev.push_back({EpsRational(1) - s, s, o.delta, "cubicphi-1"});
        c.sobolev.push_back({-o.delta, sp, sp, "cubicphi-2"});
    } else {
        c.predicates.push_back(predicate("cubicphi-s", "2s'+1/4-s > 0", 2 * sp + EpsRational(1, 4) - s, true));
    }
    c.predicates.push_back(predicate("s-above-half", "s-1/2 > 0", s - kHalf, true));
    c.predicates.push_back(predicate("sp-below", "2s-1/4-s' > 0", 2 * s - EpsRational(1, 4) - sp, true));

    if (s == EpsRational(1))
        c.predicates.push_back(predicate("a-window", "s = 1 is exempt from the a window", s - EpsRational(1), false));
    else
        c.predicates.push_back(
            predicate("a-window", "min(2s,2-s)-1 > 0", min(2 * s, EpsRational(2) - s) - EpsRational(1), true));
    c.predicates.push_back(predicate("sigma-prime-window", "1+2s > 0", EpsRational(1) + 2 * s, true));
    c.predicates.push_back(predicate("a-window-cor", "2s > 0", 2 * s, true));
}

void add_theta0_part(Catalog& c, const EpsRational& s, const EpsRational& sp, const EpsRational& t0) {
    c.predicates.push_back(predicate("theta0-low", "theta0-1/2 > 0", t0 - kHalf, true));
    c.predicates.push_back(predicate("theta0-high", "3/4-theta0 > 0", EpsRational(3, 4) - t0, true));
    if (!(sp > kHalf))
        c.atlas.push_back({EpsRational(1) - s, s, 2 * sp - EpsRational(3, 4) - kEps, EpsRational(1) - t0 - kEps, t0,
                           EpsRational(0), "cubicphi-step1"});
}

void add_theta1_part(Catalog& c, const EpsRational& s, const EpsRational& sp, const EpsRational& t1) {
    c.predicates.push_back(predicate("theta1-half", "theta1-1/2 > 0", t1 - kHalf, true));
    c.predicates.push_back(predicate("theta1-sp", "theta1-(1-s') > 0", t1 - (EpsRational(1) - sp), true));
    c.predicates.push_back(predicate("theta1-3/4", "3/4-theta1 > 0", EpsRational(3, 4) - t1, true));
    c.predicates.push_back(
        predicate("theta1-4s", "4s-s'-1-theta1 > 0", 4 * s - sp - EpsRational(1) - t1, true));
    c.predicates.push_back(predicate("theta1-2s", "2s-1/2-theta1 > 0", 2 * s - kHalf - t1, true));
    if (!(sp > kHalf))
        c.atlas.push_back({EpsRational(3, 4) + kEps - 2 * sp, sp, sp, EpsRational(0), t1, t1, "cubicphi-step2"});
}

void add_joint_part(Catalog& c, const EpsRational& s, const EpsRational& sp, const EpsRational& t0,
                    const EpsRational& t1) {
    const EpsRational one(1);
    const EpsRational a0 = EpsRational(3, 2) - sp;
    const EpsRational lo = s - kHalf;
    c.atlas.push_back({a0, lo, lo, kHalf - t1 - kEps, t0, t0, "nullA-I1"});
    c.atlas.push_back({a0, lo, lo, one - t1 - kEps, t0 - kHalf, t0, "nullA-I2"});
    const EpsRational p0 = kHalf - s;
    const EpsRational p2 = sp + kHalf;
    c.atlas.push_back({p0, lo, p2, kHalf - t0 - kEps, t0, t1, "nullphi-J1"});
    c.atlas.push_back({p0, lo, p2, one - t0 - kEps, t0 - kHalf, t1, "nullphi-J2"});
    c.atlas.push_back({p0, lo, p2, one - t0 - kEps, t0, t1 - kHalf, "nullphi-J3"});
}

bool holds(const Catalog& c, const CatalogOptions& o) {
    for (const auto& p : c.predicates)
        if (!p.pass) return false;
    for (const auto& sp : c.sobolev)
        if (!check_sobolev_product(sp.s0, sp.s1, sp.s2, o.max_as_one).pass) return false;
    for (const auto& e : c.atlas)
        if (!atlas_holds(e)) return false;
    return true;
}

std::vector<EpsRational> theta_candidates() {
    std::vector<EpsRational> out;
    for (int k = 64; k <= 96; ++k) {
        out.emplace_back(k, 128);
        out.push_back(EpsRational(k, 128) + kEps);
    }
    return out;
}

}  // namespace

Catalog reduction_catalog(const ExponentPoint& p, const CatalogOptions& options) {
    Catalog c;
    add_point_part(c, p.s, p.sp, options);
    add_theta0_part(c, p.s, p.sp, p.theta0);
    add_theta1_part(c, p.s, p.sp, p.theta1);
    add_joint_part(c, p.s, p.sp, p.theta0, p.theta1);
    return c;
}

CatalogReport check_catalog(const Catalog& catalog, const CatalogOptions& options) {
    CatalogReport out;
    for (const auto& e : catalog.atlas) out.reports.push_back(check_atlas(e));
    for (const auto& sp : catalog.sobolev) {
        auto r = check_sobolev_product(sp.s0, sp.s1, sp.s2, options.max_as_one);
        r.label = sp.label;
        out.reports.push_back(std::move(r));
    }
    for (const auto& p : catalog.predicates) out.reports.push_back(p);
    for (const auto& r : out.reports) out.pass = out.pass && r.pass;
    return out;
}

std::optional<ThetaWitness> find_thetas(const EpsRational& s, const EpsRational& sp, const CatalogOptions& options) {
    Catalog point;
    add_point_part(point, s, sp, options);
    if (!holds(point, options)) return std::nullopt;

    static const std::vector<EpsRational> candidates = theta_candidates();
    std::vector<char> ok1(candidates.size());
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        Catalog c;
        add_theta1_part(c, s, sp, candidates[j]);
        ok1[j] = holds(c, options);
    }
    for (const auto& t0 : candidates) {
        Catalog c0;
        add_theta0_part(c0, s, sp, t0);
        if (!holds(c0, options)) continue;
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (!ok1[j]) continue;
            Catalog joint;
            add_joint_part(joint, s, sp, t0, candidates[j]);
            if (holds(joint, options)) return ThetaWitness{t0, candidates[j]};
        }
    }
    return std::nullopt;
}

ThetaSearch feasible_thetas(const EpsRational& s, const EpsRational& sp, const CatalogOptions& options) {
    ThetaSearch out;
    out.witness = find_thetas(s, sp, options);
    const ExponentPoint p = out.witness ? ExponentPoint{s, sp, out.witness->theta0, out.witness->theta1}
                                        : ExponentPoint{s, sp, EpsRational(5, 8), EpsRational(5, 8)};
    out.report = check_catalog(reduction_catalog(p, options), options);
    return out;
}

bool closed_form_region(const EpsRational& s, const EpsRational& sp) {
    const EpsRational one(1);
    if (!(EpsRational(1, 4) < sp && sp <= one)) return false;
    if (!(EpsRational(1, 2) < s && s <= one)) return false;
    // s' > s/2 - 1/8 is tested as 8s' > 4s - 1 to keep the eps part integral.
    return sp > EpsRational(3, 2) - 2 * s && 8 * sp > 4 * s - one && sp < 4 * s - EpsRational(3, 2);
}

}  // namespace mkg::atlas
