#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewseries/skew_poly.hpp"

namespace skewseries {

// Syntactic shape of a normalized element of S. Unit: a unit of S (unit series,
// theta-degree 0). TypeA_X / TypeA_Theta: the atoms X and theta (used for
// stripped atoms and factor reports). TypeB: congruent to 1 mod XS with
// theta-degree >= 1. TypeC: reduction mod X is a monic polynomial f in k[theta]
// of degree n >= 1 (and the element is not theta itself). Shape is a syntactic
// class; it never asserts irreducibility.
struct Shape {
    enum class Kind { Unit, TypeA_X, TypeA_Theta, TypeB, TypeC };
    Kind kind;
    std::vector<FieldElem> f;  // TypeC: coefficients of the monic f = (z mod X)
    int n = 0;                 // TypeC: deg f

    static Shape unit() { return {Kind::Unit, {}, 0}; }
    static Shape atom_x() { return {Kind::TypeA_X, {}, 0}; }
    static Shape atom_theta() { return {Kind::TypeA_Theta, {}, 0}; }
    static Shape type_b() { return {Kind::TypeB, {}, 0}; }
    static Shape type_c(std::vector<FieldElem> f_coeffs);

    std::string describe() const;
};

// Decomposition input = X^x_exp * unit * core * theta^theta_exp mod X^prec,
// where the scalar unit makes core mod X monic in k[theta] (or equal to 1),
// core has no X or theta factor left to strip, and shape classifies core.
struct NormalizationCertificate {
    int x_exp;
    int theta_exp;
    FieldElem unit;
    SkewPoly core;
    Shape shape;
    int prec;

    SkewPoly reassemble() const;  // X^a * unit * core * theta^b
};

NormalizationCertificate strip_and_classify(const SkewPoly& z);

// Sufficient irreducibility certificate: val(z_0) = 0, val(z_i) >= 1 for all
// 1 <= i <= m, and val(z_m) = 1 exactly. std::nullopt means "not applicable",
// never "reducible".
struct EisensteinCertificate {
    int m;     // theta-degree
    int prec;  // the valuations were read off at this precision
};
std::optional<EisensteinCertificate> eisenstein_irreducible(const SkewPoly& z);

// S = XS + zS holds iff z mod X is a nonzero constant of k[theta].
bool condition_CO(const SkewPoly& z);

// Shared hypothesis check for the converse-Eisenstein extraction: locates the
// largest index n whose coefficient is a unit of k[[X]] and requires
// 1 <= n < deg z (all higher coefficients are then divisible by X).
struct NotirrHypothesis {
    bool ok;
    int n;                      // the located unit index (when ok)
    int m;                      // theta-degree
    std::string failed_clause;  // empty when ok
};
NotirrHypothesis notirr_hypothesis(const SkewPoly& z);

}  // namespace skewseries
