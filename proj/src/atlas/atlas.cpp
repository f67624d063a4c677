#include <array>
#include <string_view>

#include "mkg/atlas/atlas.hpp"

namespace mkg::atlas {

void FeasibilityReport::add(ConditionRecord record) {
    pass = pass && record.pass;
    conditions.push_back(std::move(record));
}

const ConditionRecord* FeasibilityReport::first_failure() const {
    for (const auto& c : conditions)
        if (!c.pass) return &c;
    return nullptr;
}

bool is_strict(char condition) {
    return std::string_view("aefghijk").find(condition) != std::string_view::npos;
}

namespace {

struct Condition {
    char id;
    const char* relation;
    EpsRational lhs;
    EpsRational rhs;
};

std::array<Condition, 14> conditions(const ProductEstimate& e) {
    const EpsRational sum = e.s0 + e.s1 + e.s2;
    const EpsRational bsum = e.b0 + e.b1 + e.b2;
    const EpsRational zero;
    const EpsRational half(1, 2);
    return {{
        {'a', "b0+b1+b2 > 1/2", bsum, half},
        {'b', "b0+b1 >= 0", e.b0 + e.b1, zero},
        {'c', "b0+b2 >= 0", e.b0 + e.b2, zero},
        {'d', "b1+b2 >= 0", e.b1 + e.b2, zero},
        {'e', "s0+s1+s2 > 3/2-(b0+b1+b2)", sum, EpsRational(3, 2) - bsum},
        {'f', "s0+s1+s2 > 1-min(b0+b1,b0+b2,b1+b2)", sum,
         EpsRational(1) - min(min(e.b0 + e.b1, e.b0 + e.b2), e.b1 + e.b2)},
        {'g', "s0+s1+s2 > 1/2-min(b0,b1,b2)", sum, half - min(min(e.b0, e.b1), e.b2)},
        {'h', "s0+s1+s2 > 3/4", sum, EpsRational(3, 4)},
        {'i', "(s0+b0)+2s1+2s2 > 1", e.s0 + e.b0 + 2 * e.s1 + 2 * e.s2, EpsRational(1)},
        {'j', "2s0+(s1+b1)+2s2 > 1", 2 * e.s0 + e.s1 + e.b1 + 2 * e.s2, EpsRational(1)},
        {'k', "2s0+2s1+(s2+b2) > 1", 2 * e.s0 + 2 * e.s1 + e.s2 + e.b2, EpsRational(1)},
        {'l', "s1+s2 >= max(0,-b0)", e.s1 + e.s2, max(zero, -e.b0)},
        {'m', "s0+s2 >= max(0,-b1)", e.s0 + e.s2, max(zero, -e.b1)},
        {'n', "s0+s1 >= max(0,-b2)", e.s0 + e.s1, max(zero, -e.b2)},
    }};
}

bool holds(const EpsRational& margin, bool strict) { return strict ? margin.sign() > 0 : margin.sign() >= 0; }

}  // namespace

FeasibilityReport check_atlas(const ProductEstimate& e) {
    FeasibilityReport report;
    report.label = e.label;
    for (const auto& c : conditions(e)) {
        const bool strict = is_strict(c.id);
        const EpsRational margin = c.lhs - c.rhs;
        report.add({std::string(1, c.id), c.relation, margin, strict, holds(margin, strict)});
    }
    return report;
}

bool atlas_holds(const ProductEstimate& e) {
    for (const auto& c : conditions(e))
        if (!holds(c.lhs - c.rhs, is_strict(c.id))) return false;
    return true;
}

FeasibilityReport check_sobolev_product(const EpsRational& s0, const EpsRational& s1, const EpsRational& s2,
                                        bool max_as_one) {
    FeasibilityReport report;
    const EpsRational sum = s0 + s1 + s2;
    std::vector<ConditionRecord> clauses;
    clauses.push_back({"sum>=1", "s0+s1+s2 >= 1", sum - EpsRational(1), false, false});
    if (max_as_one) {
        clauses.push_back({"sum>=max", "s0+s1+s2 >= max(s0,s1,s2)", sum - max(max(s0, s1), s2), false, false});
    } else {
        clauses.push_back({"sum>=s0", "s0+s1+s2 >= s0", sum - s0, false, false});
        clauses.push_back({"sum>=s1", "s0+s1+s2 >= s1", sum - s1, false, false});
        clauses.push_back({"sum>=s2", "s0+s1+s2 >= s2", sum - s2, false, false});
    }
    std::int64_t equalities = 0;
    for (auto& c : clauses) {
        c.pass = c.margin.sign() >= 0;
        if (c.margin.sign() == 0) ++equalities;
        report.add(std::move(c));
    }
    report.add({"eq<=1", "at most one equality", EpsRational(1 - equalities), false, equalities <= 1});
    return report;
}

}  // namespace mkg::atlas
