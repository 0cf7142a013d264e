#include "skewseries/euclid.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "skewseries/errors.hpp"

namespace skewseries {

namespace {

// One row of the extended chain together with structural support bounds for
// its three components. The bounds answer "above which theta-degree is this
// component exactly zero?" — a question the coefficient maps cannot answer on
// their own, because the normalization erases entries that are zero at full
// precision, and an erased entry (zero at working precision) is a weaker
// statement than an exact zero. Each elimination updates the bounds from the
// algebra of the step, so they stay valid no matter what the maps dropped.
struct ExtRow {
    SkewPoly r;
    SkewPoly u;
    SkewPoly v;
    int hr;
    int hu;
    int hv;
};

// Folds the rational content of every known coefficient of p into the
// accumulator pair (gcd of numerators, lcm of denominators).
void accumulate_content(const SkewPoly& p, boost::multiprecision::cpp_int& num_gcd,
                        boost::multiprecision::cpp_int& den_lcm) {
    for (const auto& [i, s] : p.coeffs()) {
        if (s.is_zero()) continue;
        for (int e = s.val(); e < s.abs_prec(); ++e) {
            const FieldElem c = s.coeff(e);
            if (c.is_zero()) continue;
            num_gcd = gcd(num_gcd, numerator(c.rational()));
            den_lcm = lcm(den_lcm, denominator(c.rational()));
        }
    }
}

// Rescale a whole row by the unit scalar that clears its rational content, so
// the coefficients become coprime integers. The scale is taken from the
// remainder (or from the cofactors once the remainder is zero) and applied to
// all three entries, which preserves row.r = row.u * a + row.v * b because
// scalars are central in T. Without this the chain's coefficients keep every
// factor the eliminations multiply in and grow out of control. Prime-field
// scalars cannot grow, so there the scale is 1.
void strip_content(ExtRow& row) {
    const Field field = row.r.ctx()->field;
    if (field.is_prime_field()) return;
    boost::multiprecision::cpp_int num_gcd = 0;
    boost::multiprecision::cpp_int den_lcm = 1;
    if (!row.r.is_zero()) {
        accumulate_content(row.r, num_gcd, den_lcm);
    } else {
        accumulate_content(row.u, num_gcd, den_lcm);
        accumulate_content(row.v, num_gcd, den_lcm);
    }
    if (num_gcd == 0) return;
    const FieldElem s(field, Rational(den_lcm, num_gcd));
    if (s.is_one()) return;
    row.r = s * row.r;
    row.u = s * row.u;
    row.v = s * row.v;
}

// Highest theta-degree with a stored entry, counting entries that are only
// known to vanish at a reduced window; -1 when nothing is stored.
int key_deg(const SkewPoly& p) {
    return p.coeffs().empty() ? -1 : p.coeffs().rbegin()->first;
}

// Coefficient-wise left multiple of p by c that materializes every
// theta-degree up to the structural support bound hi. An absent coefficient
// below the bound implicitly claims "zero at working precision", and
// multiplying by a series of negative valuation would silently shift that
// claim below the working precision — past what earlier window clamping
// actually kept. Materializing the entry records the honest, reduced window
// instead. Above the bound the absent entries are exact zeros and stay
// absent.
SkewPoly scaled_materialized(const Series& c, const SkewPoly& p, int hi) {
    std::map<int, Series> out;
    for (int i = 0; i <= hi; ++i) {
        out.emplace(i, c * p.coeff(i));
    }
    return SkewPoly::from_coeffs(p.ctx(), p.tag(), std::move(out));
}

// Strips the X-power content of a fresh input row: r and X^{-w} r generate
// the same left ideal of T, and starting the chain without the content means
// none of the fixed window is spent carrying it. The shift is a unit of T
// applied coefficient-wise to the whole row, so the Bezout combination is
// preserved; the cofactor simply picks up a negative valuation. The chain
// treats its inputs as the stored representatives, whose absent entries are
// exact zeros, so plain coefficient-wise scaling (present entries only) is
// sound here and no gaps have to be materialized.
void strip_input_x(ExtRow& row) {
    if (row.r.is_zero()) return;
    const int w = row.r.min_val();
    if (w <= 0) return;
    int rel = 0;
    for (const auto& [i, s] : row.r.coeffs()) {
        if (s.is_zero()) continue;
        rel = std::max(rel, s.abs_prec() - s.val());
    }
    const Series xs = Series::x_power(row.r.ctx()->field, -w, -w + rel + w);
    row.r = xs * row.r;
    row.u = xs * row.u;
    row.v = xs * row.v;
}

// Exact division of a known window by X^c: every bound shifts down by c.
// Unlike multiplying by an X-power series, this never reinterprets what the
// window claims, because it acts on a single present series.
Series xshift_down(const Series& s, int c) {
    if (c == 0) return s;
    if (s.is_zero()) return Series(s.field(), s.abs_prec() - c);
    return Series(s.field(), s.val() - c, s.coeffs(), s.abs_prec() - c);
}

// One elimination applied to a single row component:
//   p  :=  tl * p - nu * alpha^j(. ) applied to d's coefficients
// carried out series-by-series over every theta-degree up to the structural
// support bound hi of the result. Working per coefficient keeps the window
// bookkeeping honest for degrees where a map entry is absent below the
// bound: SkewPoly::coeff turns the absence into an explicit zero at working
// precision, and the series products then shrink that claim exactly as far
// as nu's valuation requires. Degrees above the bound are exact zeros and
// stay absent. The skip index marks the one degree where the two sides of
// the subtraction are the same series product, so the true value cancels
// exactly and the entry may be omitted rather than recorded as a zero with
// a shrunken window.
SkewPoly eliminate(const SkewPoly& p, const Series& tl, const Series& nu, const SkewPoly& d,
                   int j, int hi, int skip) {
    ContextPtr ctx = d.ctx();
    std::map<int, Series> out;
    for (int i = 0; i <= hi; ++i) {
        if (i == skip) continue;
        Series term = tl * p.coeff(i);
        if (i >= j) {
            term = term - nu * ctx->alpha.apply(d.coeff(i - j), j);
        }
        out.emplace(i, std::move(term));
    }
    return SkewPoly::from_coeffs(std::move(ctx), RingTag::T, std::move(out));
}

// Structural support bound of tl * p - nu * theta^j * d given the operands'
// bounds (-1 meaning exactly zero).
int bound_after(int hp, int hd, int j) {
    return hd < 0 ? hp : std::max(hp, j + hd);
}

// Reduces row.r below deg(div.r) while maintaining the combination
// row.r = row.u * a + row.v * b. Instead of dividing by the divisor's leading
// series (whose inverse would spread denominators over every later step),
// each elimination cross-multiplies with the unit part of the alpha-twisted
// leading series — a valuation-zero factor, so the fixed window cap never
// charges the row for a valuation climb — and subtracts the matching exact
// multiple of the divisor. Content-stripped integer rows stay integral; the
// X-power of the lead moves into (possibly negative) valuations, which T
// permits.
// The chain can exhaust the window on valuation-heavy inputs. An entry above
// the visible degree that is only known to vanish at a reduced window leaves
// the degree itself uncertified; dividing by (or returning) an element whose
// lead cannot be identified would be silently wrong rather than imprecise,
// so such states are refused. The threshold is the precision the caller
// ultimately claims, not the (possibly padded) precision the chain runs at:
// stored digits are exact, so "zero mod X^certify_prec" pins the degree of
// everything the caller will see.
void require_certified_degree(const SkewPoly& p, int certify_prec, const char* message) {
    const int d = p.degree();
    for (const auto& [i, s] : p.coeffs()) {
        if (i > d && s.abs_prec() < certify_prec) {
            throw precision_error(message);
        }
    }
}

// Re-embeds a stored window at a higher absolute precision by zero-padding.
// This is sound at the representative level: the stored coefficients are the
// exact object the chain computes with, so the padded tail is exactly zero.
Series widened_series(const Series& s, int wide_prec) {
    if (s.is_zero()) {
        return Series(s.field(), wide_prec);
    }
    std::vector<FieldElem> cs = s.coeffs();
    cs.resize(static_cast<std::size_t>(wide_prec - s.val()), FieldElem(s.field(), 0));
    return Series(s.field(), s.val(), std::move(cs), wide_prec);
}

// A context identical to ctx except for `extra` additional X-adic digits of
// working precision (and matching valuation headroom).
ContextPtr widen_context(const ContextPtr& ctx, int extra) {
    const int wide_prec = ctx->prec + extra;
    return make_context(ctx->field, widened_series(ctx->alpha.q(), wide_prec), wide_prec,
                        ctx->vmax + extra);
}

SkewPoly widened(const SkewPoly& p, const ContextPtr& wide) {
    std::map<int, Series> out;
    for (const auto& [i, s] : p.coeffs()) {
        out.emplace(i, widened_series(s, wide->prec));
    }
    return SkewPoly::from_coeffs(wide, p.tag(), std::move(out));
}

// Brings a widened result back into the caller's context; the normalization
// truncates every window to the working precision.
SkewPoly narrowed(const SkewPoly& p, const ContextPtr& ctx) {
    std::map<int, Series> out = p.coeffs();
    return SkewPoly::from_coeffs(ctx, p.tag(), std::move(out));
}

// The chain burns relative precision on every elimination whose divisor lead
// carries an X-power, and a fixed window can simply run out. Because the
// computation is exact on representatives, running it with padded windows is
// sound and recovers whatever the fixed window lost; the schedule doubles the
// padding until the narrowed result stands at full working precision. The
// exact chain only has finitely many eliminations, each burning a finite
// amount, so some padding always suffices; the cap is generous and only
// guards against degenerate contexts.
constexpr int kMaxWidenings = 6;

void pseudo_reduce(ExtRow& row, const ExtRow& div, int certify_prec) {
    ContextPtr ctx = div.r.ctx();
    require_certified_degree(div.r, certify_prec,
                             "remainder chain lost the ability to identify a leading term");
    const int m = div.r.degree();
    const Series lead = div.r.coeff(m);
    const int lv = lead.val();
    while (!row.r.is_zero() && row.r.degree() >= m) {
        const int n = row.r.degree();
        const int j = n - m;
        const Series tl = xshift_down(ctx->alpha.apply(lead, j), lv);
        const Series nu = xshift_down(row.r.coeff(n), lv);
        // The remainder's top term cancels exactly; when both support bounds
        // are tight the whole bound drops below n, otherwise the exact zero
        // at n sits inside the new range and the skip records it.
        const int hr = (row.hr == n && div.hr == m) ? n - 1 : bound_after(row.hr, div.hr, j);
        const int hu = bound_after(row.hu, div.hu, j);
        const int hv = bound_after(row.hv, div.hv, j);
        row.r = eliminate(row.r, tl, nu, div.r, j, hr, n);
        row.u = eliminate(row.u, tl, nu, div.u, j, hu, -1);
        row.v = eliminate(row.v, tl, nu, div.v, j, hv, -1);
        row.hr = hr;
        row.hu = hu;
        row.hv = hv;
        strip_content(row);
    }
}

// Extended Euclid on (a, b) in T by fraction-free pseudo-division: every
// elimination rescales the active row by a unit of T, so each row still
// satisfies row.r = row.u * a + row.v * b and spans the same right ideals as
// the classical remainder chain. Returns the last two rows: prev.r is the
// last nonzero remainder (a generator of Ta + Tb) and last.r is zero at its
// stored precision, so last.u * a = -last.v * b generates Ta intersect Tb.
std::pair<ExtRow, ExtRow> extended_euclid(const SkewPoly& a, const SkewPoly& b,
                                          int certify_prec) {
    ContextPtr ctx = a.ctx();
    const SkewPoly zero = SkewPoly::zero(ctx, RingTag::T);
    const SkewPoly one = SkewPoly::theta(ctx, RingTag::T, 0);
    ExtRow prev{a.with_tag(RingTag::T), one, zero, key_deg(a), 0, -1};
    ExtRow last{b.with_tag(RingTag::T), zero, one, key_deg(b), -1, 0};
    strip_content(prev);
    strip_content(last);
    strip_input_x(prev);
    strip_input_x(last);
    while (!last.r.is_zero()) {
        pseudo_reduce(prev, last, certify_prec);
        std::swap(prev, last);
    }
    return {std::move(prev), std::move(last)};
}

}  // namespace

GcrdResult gcrd(const SkewPoly& a, const SkewPoly& b) {
    if (a.ctx() != b.ctx()) {
        throw usage_error("operands come from different ring contexts");
    }
    if (a.is_zero() && b.is_zero()) {
        throw usage_error("gcrd(0, 0) is undefined");
    }
    const ContextPtr ctx = a.ctx();
    const SkewPoly at = a.with_tag(RingTag::T);
    const SkewPoly bt = b.with_tag(RingTag::T);
    int best_prec = std::numeric_limits<int>::min();
    for (int attempt = 0;; ++attempt) {
        const bool final_attempt = attempt == kMaxWidenings;
        try {
            const ContextPtr wide = widen_context(ctx, ctx->prec << attempt);
            auto [row, beyond] = extended_euclid(widened(a, wide), widened(b, wide), ctx->prec);
            if (row.r.is_zero()) {
                throw precision_error("gcrd lost all precision");
            }
            require_certified_degree(row.r, ctx->prec,
                                     "gcrd degree is not certified at working precision");
            const Series lead_inv = inverse(row.r.coeff(row.r.degree()));
            SkewPoly g = narrowed(scaled_materialized(lead_inv, row.r, row.hr), ctx);
            SkewPoly u = narrowed(scaled_materialized(lead_inv, row.u, row.hu), ctx);
            SkewPoly v = narrowed(scaled_materialized(lead_inv, row.v, row.hv), ctx);
            // The certificate is recomputed from scratch against the original
            // operands, so its window is honest no matter what the padded run
            // did internally.
            SkewPoly check = g - (u * at + v * bt);
            if (!check.is_zero()) {
                throw error("gcrd self-check failed");
            }
            const int prec = check.effective_prec();
            // Anything below full working precision may just mean the padding
            // was not generous enough yet; retry unless widening has stopped
            // buying digits (then the inputs themselves are the limit).
            if (prec >= ctx->prec || final_attempt || prec <= best_prec) {
                return GcrdResult{std::move(g), std::move(u), std::move(v), prec};
            }
            best_prec = prec;
        } catch (const error&) {
            if (final_attempt) {
                throw;
            }
        }
    }
}

SkewPoly lclm(const SkewPoly& a, const SkewPoly& b) {
    if (a.ctx() != b.ctx()) {
        throw usage_error("operands come from different ring contexts");
    }
    if (a.is_zero() || b.is_zero()) {
        throw usage_error("lclm with a zero operand is undefined");
    }
    const ContextPtr ctx = a.ctx();
    int best_prec = std::numeric_limits<int>::min();
    for (int attempt = 0;; ++attempt) {
        const bool final_attempt = attempt == kMaxWidenings;
        try {
            const ContextPtr wide = widen_context(ctx, ctx->prec << attempt);
            const SkewPoly aw = widened(a, wide);
            const SkewPoly bw = widened(b, wide);
            auto [row, beyond] = extended_euclid(aw, bw, ctx->prec);
            SkewPoly m = beyond.u * aw.with_tag(RingTag::T);
            if (m.is_zero()) {
                throw precision_error("lclm lost all precision");
            }
            require_certified_degree(m, ctx->prec,
                                     "lclm degree is not certified at working precision");
            // The certificate for the result is the final chain row itself:
            // the product is a left multiple of a by construction, and the
            // identity below re-verifies from scratch that it agrees with
            // -(beyond.v) * b within the stored windows. A division-based
            // check would be too strict here: normalizing and dividing by
            // leads of positive valuation amplifies the tails the window
            // legitimately discarded, so an exact remainder cannot be
            // demanded at the representative level.
            SkewPoly check = m + beyond.v * bw.with_tag(RingTag::T);
            if (!check.is_zero()) {
                throw error("lclm self-check failed");
            }
            // Normalize against the structural support bound of the product,
            // not just its stored keys: entries the normalization erased as
            // zero at working precision still have to shrink their claims
            // when the lead inverse carries a negative valuation.
            const int hm = beyond.hu + key_deg(aw);
            const Series lead_inv = inverse(m.coeff(m.degree()));
            SkewPoly result = narrowed(scaled_materialized(lead_inv, m, hm), ctx);
            if (result.is_zero()) {
                throw precision_error("lclm lost all precision");
            }
            const int prec = result.effective_prec();
            if (prec >= ctx->prec || final_attempt || prec <= best_prec) {
                return result;
            }
            best_prec = prec;
        } catch (const error&) {
            if (final_attempt) {
                throw;
            }
        }
    }
}

}  // namespace skewseries
