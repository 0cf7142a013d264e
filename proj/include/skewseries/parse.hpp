#pragma once

#include <string>

#include "skewseries/skew_poly.hpp"

namespace skewseries {

// Element grammar shared by the CLI and tests:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*            products evaluate in S/T order
//   factor := atom ['^' nonneg-integer]
//   atom   := integer | integer '/' integer | 'X' | 'theta' | 'θ' | '(' expr ')'
// Throws parse_error with a character position on malformed input.
SkewPoly parse_element(const std::string& src, ContextPtr ctx, RingTag tag = RingTag::S);

Series parse_series(const std::string& src, Field field, int abs_prec);

// Canonical textual form, reparseable for elements of S:
// "(c0) + (c1)*theta + (c2)*theta^2". Laurent coefficients with negative
// valuations print X^-k terms (display only; the grammar does not read them).
std::string print_element(const SkewPoly& z);

}  // namespace skewseries
