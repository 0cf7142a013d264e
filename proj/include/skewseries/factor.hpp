#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewseries/taxonomy.hpp"

namespace skewseries {

// Witness that z has the monic degree-n right divisor theta^n - sum h_i theta^i,
// with quotient * divisor = z mod X^prec. The h series are the solution of the
// X-adic recursion for the f_n-normalized element f_n^{-1} z (the recursion's
// base case pins h_i(0) = -(f_n^{-1} f_i)(0)); the quotient is rescaled back to
// pair with the original z.
struct RightFactorWitness {
    SkewPoly divisor;
    SkewPoly quotient;
    int prec;
    std::vector<Series> h;  // h_0 .. h_{n-1}
    int n;
};

struct ExtractResult {
    std::optional<RightFactorWitness> witness;
    std::string failure;  // hypothesis clause or precision report when empty witness

    bool ok() const { return witness.has_value(); }
};

// Converse-Eisenstein extraction: requires some interior coefficient index n
// (1 <= n < deg z) to be a unit with every higher coefficient divisible by X;
// returns the monic right factor obtained by one-X-degree-per-pass refinement.
ExtractResult extract_right_factor(const SkewPoly& z);

// Canonical form of a TypeC element: when the leading theta-coefficient is a
// unit of k[[X]], c_hat = leading^{-1} * c (monic, nonzero constant
// theta-coefficient). Otherwise the extraction hypothesis necessarily holds and
// the element is reducible; the factorization witness is returned instead.
struct CanonicalizeResult {
    enum class Kind { Canonical, ReducibleInstead };
    Kind kind;
    std::optional<SkewPoly> c_hat;
    std::optional<Series> u;  // the unit with c_hat = u * c
    std::optional<RightFactorWitness> witness;
};
CanonicalizeResult canonicalize_typeC(const SkewPoly& c);

// Witness for c*b = b_prime * c_prime with shapes swapped: c_prime monic of
// degree deg c with nonzero constant theta-coefficient, b_prime congruent to a
// unit mod XS of degree deg b.
struct CommutationWitness {
    SkewPoly b_prime;
    SkewPoly c_prime;
    int prec;
};

struct CommuteResult {
    std::optional<CommutationWitness> witness;
    // A failed validation is data, not a crash: the operation doubles as an
    // empirical audit and reports what broke for investigation.
    std::string falsification;

    bool ok() const { return witness.has_value(); }
};

// c must be canonical TypeC (monic, nonzero theta^0 coefficient); b must be
// TypeB-normalized (b = 1 + X*s, deg >= 1). Computes cb, extracts the monic
// right factor c_prime of degree deg c, takes b_prime as the quotient, and
// validates the product identity plus all degree/shape claims.
CommuteResult commute_CB(const SkewPoly& c, const SkewPoly& b);

// One entry of a best-effort factorization. Entries multiply out to the input
// in listed order. atom_at_precision marks factors that resisted extraction and
// the bounded search; such a tag is relative to the working precision, not a
// proof of irreducibility (though an attached Eisenstein certificate is one).
struct FactorEntry {
    SkewPoly factor;
    Shape shape;
    bool atom_at_precision = false;
    std::optional<EisensteinCertificate> eisenstein;
};

struct FactorizationReport {
    std::vector<FactorEntry> factors;
    int prec;
    bool product_verified;  // product of factors == input mod X^prec, rechecked
};

// Strips X/theta atoms and the scalar unit, then repeatedly extracts right
// factors where the hypothesis holds and otherwise tries a bounded-degree
// right-factor search (mod-X candidates lifted X-degree by X-degree through
// exact k-linear solves, degree-lex order, first solution wins). Factors that
// resist every attempt are tagged AtomAtPrecision. Always returns a report;
// completeness is not guaranteed.
FactorizationReport factor_best_effort(const SkewPoly& z);

}  // namespace skewseries
