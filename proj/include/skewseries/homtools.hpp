#pragma once

#include <optional>
#include <string>

#include "skewseries/skew_poly.hpp"

namespace skewseries {

// Witness that a and b are similar in T (T/Ta and T/Tb isomorphic): gcrd(u, b)
// is a unit and monic lclm(u, b) equals monic(a*u) at precision, so right
// multiplication by u induces the isomorphism.
struct SimilarityWitness {
    SkewPoly u;
    int prec;
};

enum class SimilarityCheck {
    Verified,
    RefutedDegree,      // similar elements have equal theta-degree
    RefutedGcrdClause,  // gcrd(u, b) is not a unit
    RefutedLclmClause,  // lclm(u, b) is not an associate of a*u
};
std::string to_string(SimilarityCheck check);

SimilarityCheck verify_similarity(const SkewPoly& a, const SkewPoly& b, const SkewPoly& u);

// Bounded search for a similarity witness: solves a*u = w*b as a truncated
// k-linear kernel problem for deg u < deg_bound and filters candidates through
// verify_similarity. A semidecision: not_found is not a refutation (except for
// the degree fast path, which is).
struct SimilaritySearchResult {
    std::optional<SimilarityWitness> witness;
    int deg_bound;
    std::string reason;  // set when no witness ("degree mismatch" or "not found up to bound")

    bool found() const { return witness.has_value(); }
};
SimilaritySearchResult search_similarity(const SkewPoly& a, const SkewPoly& b, int deg_bound);

// Witness for the Ext-vanishing criterion: u*a + b*v = 1 mod X^prec.
struct ExtWitness {
    SkewPoly u;
    SkewPoly v;
    int prec;
};

struct ExtSearchBounds {
    int slack = 2;   // deg u < deg b + slack, deg v < deg a + slack
    int max_slack = 8;
    int min_val = 0;       // coefficient valuation window start for u, v
    int min_val_floor = -2;
};

struct ExtSearchResult {
    std::optional<ExtWitness> witness;
    ExtSearchBounds bounds;  // the bounds in force when the search stopped
    bool found() const { return witness.has_value(); }
};

// Layered exact solve for u*a + b*v = 1 with escalating degree slack and
// valuation window; every witness is re-verified by multiplication and carries
// the verified precision. A semidecision.
ExtSearchResult ext_vanishing_search(const SkewPoly& a, const SkewPoly& b,
                                     ExtSearchBounds bounds = {});

}  // namespace skewseries
