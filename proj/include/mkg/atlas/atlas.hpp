#pragma once

// Exact checks of the bilinear space-time product estimate
//   ||uv||_{H^{-s0,-b0}} <~ ||u||_{H^{s1,b1}} ||v||_{H^{s2,b2}}
// (fourteen linear conditions a..n), the Sobolev product rule, and the
// reduction catalog of the nonlinear estimates used for local well-posedness.

#include <optional>
#include <string>
#include <vector>

#include "mkg/atlas/eps_rational.hpp"

namespace mkg::atlas {

struct ProductEstimate {
    EpsRational s0, s1, s2, b0, b1, b2;
    std::string label;
};

struct ConditionRecord {
    std::string id;        ///< "a".."n", an sp clause, or a predicate name
    std::string relation;  ///< human-readable inequality
    EpsRational margin;    ///< left side minus right side
    bool strict;
    bool pass;
};

struct FeasibilityReport {
    std::string label;
    std::vector<ConditionRecord> conditions;
    bool pass = true;

    void add(ConditionRecord record);
    /// First failing record, if any.
    const ConditionRecord* first_failure() const;
};

/// True for a, e, f, g, h, i, j, k.
bool is_strict(char condition);

FeasibilityReport check_atlas(const ProductEstimate& e);
/// check_atlas(e).pass without building the report; stops at the first failure.
bool atlas_holds(const ProductEstimate& e);

/// Sobolev rule ||uv||_{H^{-s0}} <~ ||u||_{H^{s1}} ||v||_{H^{s2}}: the sum S = s0+s1+s2
/// satisfies S >= 1 and S >= max(s0, s1, s2) with at most one equality. By default the
/// max counts as three clauses S >= s_i; with max_as_one it is a single clause.
FeasibilityReport check_sobolev_product(const EpsRational& s0, const EpsRational& s1, const EpsRational& s2,
                                        bool max_as_one = false);

struct ExponentPoint {
    EpsRational s, sp, theta0, theta1;
};

struct CatalogOptions {
    EpsRational big_m{10};
    EpsRational delta{1, 100};
    bool max_as_one = false;
};

struct SobolevInstance {
    EpsRational s0, s1, s2;
    std::string label;
};

/// Every estimate the well-posedness argument reduces to at one exponent point.
struct Catalog {
    std::vector<ProductEstimate> atlas;
    std::vector<SobolevInstance> sobolev;
    std::vector<FeasibilityReport> predicates;
};

Catalog reduction_catalog(const ExponentPoint& p, const CatalogOptions& options = {});

struct CatalogReport {
    std::vector<FeasibilityReport> reports;
    bool pass = true;
};

CatalogReport check_catalog(const Catalog& catalog, const CatalogOptions& options = {});

struct ThetaWitness {
    EpsRational theta0, theta1;
};

struct ThetaSearch {
    std::optional<ThetaWitness> witness;
    /// Full catalog report at the witness, or at (s, sp, 5/8, 5/8) when none exists.
    CatalogReport report;
};

/// Scans theta0, theta1 over {k/128} and {k/128 + eps} in [1/2, 3/4] and returns the first pair
/// (theta0 outer, increasing) for which the whole catalog passes.
ThetaSearch feasible_thetas(const EpsRational& s, const EpsRational& sp, const CatalogOptions& options = {});
/// Same search, witness only.
std::optional<ThetaWitness> find_thetas(const EpsRational& s, const EpsRational& sp, const CatalogOptions& options = {});

/// 1/4 < s' <= 1, 1/2 < s <= 1 and max(3/2 - 2s, s/2 - 1/8) < s' < 4s - 3/2.
bool closed_form_region(const EpsRational& s, const EpsRational& sp);

}  // namespace mkg::atlas
