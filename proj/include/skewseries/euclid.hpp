#pragma once

#include "skewseries/skew_poly.hpp"

namespace skewseries {

// Extended right-division Euclid in T. gcrd(a, b) is the monic generator g of
// the left ideal Ta + Tb (the greatest common right divisor), together with
// Bezout coefficients: g = u*a + v*b mod X^prec.
struct GcrdResult {
    SkewPoly g;
    SkewPoly u;
    SkewPoly v;
    int prec;
};

GcrdResult gcrd(const SkewPoly& a, const SkewPoly& b);

// Monic generator of Ta intersect Tb (the least common left multiple);
// deg lclm = deg a + deg b - deg gcrd.
SkewPoly lclm(const SkewPoly& a, const SkewPoly& b);

}  // namespace skewseries
