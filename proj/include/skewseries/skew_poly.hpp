#pragma once

#include <map>
#include <string>
#include <utility>

#include "skewseries/context.hpp"

namespace skewseries {

// Which ring an element lives in: S = k[[X]][theta; alpha] (coefficient
// valuations >= 0) or its localization T = k((X))[theta; alpha].
enum class RingTag { S, T };

std::string to_string(RingTag tag);

// Skew polynomial sum_i c_i theta^i with multiplication twisted by
// theta * r = alpha(r) * theta. Coefficients are truncated (Laurent) series;
// a coefficient entry that is zero at a precision below the working precision
// is kept, because it limits what the element is known to be. Value semantics;
// safe to share read-only.
class SkewPoly {
  public:
    SkewPoly(ContextPtr ctx, RingTag tag);  // zero
    static SkewPoly zero(ContextPtr ctx, RingTag tag) { return SkewPoly(std::move(ctx), tag); }
    static SkewPoly from_coeffs(ContextPtr ctx, RingTag tag, std::map<int, Series> coeffs);
    static SkewPoly constant(ContextPtr ctx, RingTag tag, Series c);
    static SkewPoly scalar(ContextPtr ctx, RingTag tag, const FieldElem& c);
    static SkewPoly theta(ContextPtr ctx, RingTag tag, int power = 1);
    static SkewPoly x(ContextPtr ctx, RingTag tag, int power = 1);

    const ContextPtr& ctx() const { return ctx_; }
    RingTag tag() const { return tag_; }

    bool is_zero() const;  // zero at the stored precision
    int degree() const;    // max exponent with a nonzero coefficient; requires !is_zero()
    // Coefficient of theta^i (a zero series at working precision when absent).
    Series coeff(int i) const;
    const std::map<int, Series>& coeffs() const { return coeffs_; }

    // Least precision any coefficient is known to (ctx->prec for the zero element).
    int effective_prec() const;
    // Minimal coefficient valuation (zero-at-precision entries count as their precision).
    int min_val() const;  // requires !is_zero()

    SkewPoly with_tag(RingTag tag) const;  // retag; S requires valuations >= 0

    std::string to_string() const;

  private:
    void normalize();

    ContextPtr ctx_;
    RingTag tag_;
    std::map<int, Series> coeffs_;
};

SkewPoly operator-(const SkewPoly& a);
SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);  // Ore product
SkewPoly operator*(const Series& c, const SkewPoly& a);    // coefficient-wise left multiple
SkewPoly operator*(const FieldElem& c, const SkewPoly& a);

bool eq_mod(const SkewPoly& a, const SkewPoly& b, int upto);
bool eq_at_shared_prec(const SkewPoly& a, const SkewPoly& b);

struct DivisionResult {
    enum class Side { Left, Right };
    SkewPoly quotient;
    SkewPoly remainder;
    Side side;
    int prec;  // the identity dividend = (q*d | d*q) + r is verified mod X^prec
};

// Right division: z = quotient * d + remainder with deg remainder < deg d.
// In S the divisor's leading coefficient must be a unit of k[[X]]; in T any
// nonzero divisor works, at the cost of precision recorded in the result. The
// claimed precision is always re-verified against the exact residual.
DivisionResult right_divmod(const SkewPoly& z, const SkewPoly& d);
// Left division: z = d * quotient + remainder (uses alpha^{-deg d}).
DivisionResult left_divmod(const SkewPoly& z, const SkewPoly& d);

// Minimal n with X^n * t in S \ XS; returns the lifted element and n
// (negative when t already lies in XS).
std::pair<SkewPoly, int> lift_to_S(const SkewPoly& t);

// Left-multiplies by the inverse of the leading coefficient (T context).
SkewPoly monic_normalize(const SkewPoly& a);

}  // namespace skewseries
