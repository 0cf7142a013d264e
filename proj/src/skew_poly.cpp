#include "skewseries/skew_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "skewseries/errors.hpp"

namespace skewseries {

std::string to_string(RingTag tag) { return tag == RingTag::S ? "S" : "T"; }

SkewPoly::SkewPoly(ContextPtr ctx, RingTag tag) : ctx_(std::move(ctx)), tag_(tag) {
    if (!ctx_) {
        throw usage_error("skew polynomial requires a ring context");
    }
}

SkewPoly SkewPoly::from_coeffs(ContextPtr ctx, RingTag tag, std::map<int, Series> coeffs) {
    SkewPoly z(std::move(ctx), tag);
    z.coeffs_ = std::move(coeffs);
    z.normalize();
    return z;
}

SkewPoly SkewPoly::constant(ContextPtr ctx, RingTag tag, Series c) {
    std::map<int, Series> m;
    m.emplace(0, std::move(c));
    return from_coeffs(std::move(ctx), tag, std::move(m));
}

SkewPoly SkewPoly::scalar(ContextPtr ctx, RingTag tag, const FieldElem& c) {
    Series s = Series::constant(c, ctx->prec);
    return constant(std::move(ctx), tag, std::move(s));
}

SkewPoly SkewPoly::theta(ContextPtr ctx, RingTag tag, int power) {
    if (power < 0) {
        throw usage_error("theta admits no negative powers");
    }
    Series one = Series::one(ctx->field, ctx->prec);
    std::map<int, Series> m;
    m.emplace(power, std::move(one));
    return from_coeffs(std::move(ctx), tag, std::move(m));
}

SkewPoly SkewPoly::x(ContextPtr ctx, RingTag tag, int power) {
    // X^power is exact, so it is known modulo the full context precision
    // (degenerating to the zero claim when power >= prec).
    Series s = Series::x_power(ctx->field, power, ctx->prec);
    return constant(std::move(ctx), tag, std::move(s));
}

void SkewPoly::normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        Series& s = it->second;
        if (s.field() != ctx_->field) {
            throw usage_error("coefficient field does not match the context");
        }
        if (s.abs_prec() > ctx_->prec) {
            s = s.truncated(ctx_->prec);
        }
        if (it->first < 0) {
            throw usage_error("negative theta exponent");
        }
        if (s.is_zero() && s.abs_prec() >= ctx_->prec) {
            it = coeffs_.erase(it);
            continue;
        }
        if (s.eff_val() < 0 && tag_ == RingTag::S) {
            throw usage_error("coefficient with negative valuation in S");
        }
        if (s.eff_val() < -ctx_->vmax) {
            throw valuation_error("coefficient valuation fell below the context floor");
        }
        ++it;
    }
}

bool SkewPoly::is_zero() const {
    for (const auto& [i, s] : coeffs_) {
        if (!s.is_zero()) {
            return false;
        }
    }
    return true;
}

int SkewPoly::degree() const {
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!it->second.is_zero()) {
            return it->first;
        }
    }
    throw usage_error("degree of the zero element");
}

Series SkewPoly::coeff(int i) const {
    auto it = coeffs_.find(i);
    if (it != coeffs_.end()) {
        return it->second;
    }
    return Series(ctx_->field, ctx_->prec);
}

int SkewPoly::effective_prec() const {
    int p = ctx_->prec;
    for (const auto& [i, s] : coeffs_) {
        p = std::min(p, s.abs_prec());
    }
    return p;
}

int SkewPoly::min_val() const {
    if (is_zero()) {
        throw usage_error("valuation of the zero element");
    }
    int v = ctx_->prec;
    for (const auto& [i, s] : coeffs_) {
        v = std::min(v, s.eff_val());
    }
    return v;
}

SkewPoly SkewPoly::with_tag(RingTag tag) const {
    SkewPoly z = *this;
    z.tag_ = tag;
    z.normalize();
    return z;
}

std::string SkewPoly::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, s] : coeffs_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << s.to_string() << ")";
        if (i == 1) {
            out << "*theta";
        } else if (i > 1) {
            out << "*theta^" << i;
        }
    }
    return out.str();
}

namespace {

ContextPtr shared_ctx(const SkewPoly& a, const SkewPoly& b) {
    if (a.ctx() != b.ctx()) {
        throw usage_error("operands come from different ring contexts");
    }
    return a.ctx();
}

RingTag joined_tag(const SkewPoly& a, const SkewPoly& b) {
    return (a.tag() == RingTag::T || b.tag() == RingTag::T) ? RingTag::T : RingTag::S;
}

}  // namespace

SkewPoly operator-(const SkewPoly& a) {
    std::map<int, Series> out;
    for (const auto& [i, s] : a.coeffs()) {
        out.emplace(i, -s);
    }
    return SkewPoly::from_coeffs(a.ctx(), a.tag(), std::move(out));
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    ContextPtr ctx = shared_ctx(a, b);
    std::map<int, Series> out = a.coeffs();
    for (const auto& [i, s] : b.coeffs()) {
        auto it = out.find(i);
        if (it == out.end()) {
            out.emplace(i, s);
        } else {
            it->second = it->second + s;
        }
    }
    return SkewPoly::from_coeffs(std::move(ctx), joined_tag(a, b), std::move(out));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    ContextPtr ctx = shared_ctx(a, b);
    const Automorphism& alpha = ctx->alpha;
    std::map<int, Series> out;
    for (const auto& [i, ai] : a.coeffs()) {
        for (const auto& [j, bj] : b.coeffs()) {
            // a_i theta^i * b_j theta^j = a_i alpha^i(b_j) theta^{i+j}.
            // Zero-at-reduced-precision entries still bound the output window.
            Series term = ai * alpha.apply(bj, i);
            auto it = out.find(i + j);
            if (it == out.end()) {
                out.emplace(i + j, std::move(term));
            } else {
                it->second = it->second + term;
            }
        }
    }
    return SkewPoly::from_coeffs(std::move(ctx), joined_tag(a, b), std::move(out));
}

SkewPoly operator*(const Series& c, const SkewPoly& a) {
    std::map<int, Series> out;
    for (const auto& [i, s] : a.coeffs()) {
        out.emplace(i, c * s);
    }
    return SkewPoly::from_coeffs(a.ctx(), a.tag(), std::move(out));
}

SkewPoly operator*(const FieldElem& c, const SkewPoly& a) {
    std::map<int, Series> out;
    for (const auto& [i, s] : a.coeffs()) {
        out.emplace(i, c * s);
    }
    return SkewPoly::from_coeffs(a.ctx(), a.tag(), std::move(out));
}

bool eq_mod(const SkewPoly& a, const SkewPoly& b, int upto) {
    ContextPtr ctx = shared_ctx(a, b);
    SkewPoly diff = a - b;
    Series zero(ctx->field, ctx->prec);
    for (const auto& [i, s] : diff.coeffs()) {
        if (!eq_mod(s, zero, upto)) {
            return false;
        }
    }
    return true;
}

bool eq_at_shared_prec(const SkewPoly& a, const SkewPoly& b) { return (a - b).is_zero(); }

namespace {

// Shared elimination core. For Side::Right, z = q*d + r; for Side::Left,
// z = d*q + r. Each step removes the current top of r exactly, so the top
// entry becomes zero at its stored precision and the known degree drops.
DivisionResult divmod_impl(const SkewPoly& z, const SkewPoly& d, DivisionResult::Side side) {
    ContextPtr ctx = shared_ctx(z, d);
    if (d.is_zero()) {
        throw usage_error("division by zero");
    }
    RingTag tag = joined_tag(z, d);
    const int m = d.degree();
    const Series lead = d.coeff(m);
    if (tag == RingTag::S && !lead.is_unit()) {
        throw not_a_unit(
            "divisor's leading coefficient is not a unit of k[[X]]; divide in T");
    }

    const Automorphism& alpha = ctx->alpha;
    SkewPoly r = z.with_tag(tag);
    std::map<int, Series> qmap;
    while (!r.is_zero() && r.degree() >= m) {
        const int k = r.degree() - m;
        Series c(ctx->field, ctx->prec);
        if (side == DivisionResult::Side::Right) {
            // (c theta^k)(lead theta^m) has top coefficient c * alpha^k(lead).
            c = r.coeff(r.degree()) * inverse(alpha.apply(lead, k));
        } else {
            // (lead theta^m)(c theta^k) has top coefficient lead * alpha^m(c).
            c = alpha.apply(inverse(lead) * r.coeff(r.degree()), -m);
        }
        if (c.is_zero()) {
            throw precision_error("insufficient precision to form a quotient coefficient");
        }
        SkewPoly step = SkewPoly::from_coeffs(ctx, tag, {{k, c}});
        r = (side == DivisionResult::Side::Right) ? r - step * d : r - d * step;
        qmap.emplace(k, std::move(c));
    }

    SkewPoly q = SkewPoly::from_coeffs(ctx, tag, std::move(qmap));
    SkewPoly check = (side == DivisionResult::Side::Right) ? z - (q * d + r) : z - (d * q + r);
    if (!check.is_zero()) {
        throw error("division self-check failed");
    }
    return DivisionResult{std::move(q), std::move(r), side, check.effective_prec()};
}

}  // namespace

DivisionResult right_divmod(const SkewPoly& z, const SkewPoly& d) {
    return divmod_impl(z, d, DivisionResult::Side::Right);
}

DivisionResult left_divmod(const SkewPoly& z, const SkewPoly& d) {
    return divmod_impl(z, d, DivisionResult::Side::Left);
}

std::pair<SkewPoly, int> lift_to_S(const SkewPoly& t) {
    if (t.is_zero()) {
        throw usage_error("cannot lift the zero element");
    }
    const int n = -t.min_val();
    Series shift = Series::x_power(t.ctx()->field, n, n + t.ctx()->prec);
    return {(shift * t).with_tag(RingTag::S), n};
}

SkewPoly monic_normalize(const SkewPoly& a) {
    if (a.is_zero()) {
        throw usage_error("cannot normalize the zero element");
    }
    const Series lead = a.coeff(a.degree());
    if (a.tag() == RingTag::S && !lead.is_unit()) {
        throw not_a_unit("leading coefficient is not a unit of k[[X]]; normalize in T");
    }
    const Series lead_inv = inverse(lead);
    // Materialize every coefficient up to the highest stored entry: when the
    // lead inverse has negative valuation, an absent entry's implicit zero-at-
    // working-precision claim has to shrink along with the present windows, or
    // the result would claim more than the operand was known to. Entries that
    // stay at full precision are dropped again by the normalization.
    std::map<int, Series> out;
    const int hi = a.coeffs().rbegin()->first;
    for (int i = 0; i <= hi; ++i) {
        out.emplace(i, lead_inv * a.coeff(i));
    }
    return SkewPoly::from_coeffs(a.ctx(), a.tag(), std::move(out));
}

}  // namespace skewseries
