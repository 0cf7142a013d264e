#include "skewseries/sampling.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "skewseries/errors.hpp"

namespace skewseries {

int Sampler::uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
}

FieldElem Sampler::scalar(bool nonzero) {
    const Field& f = ctx_->field;
    for (int tries = 0; tries < 64; ++tries) {
        FieldElem c = FieldElem::zero(f);
        if (f.is_prime_field()) {
            c = FieldElem(f, uniform_int(0, static_cast<int>(f.modulus()) - 1));
        } else {
            int num = uniform_int(-9, 9);
            int den = uniform_int(1, 9);
            c = FieldElem(f, Rational(num, den));
        }
        if (!nonzero || !c.is_zero()) return c;
    }
    return FieldElem::one(f);
}

Series Sampler::series(int val_min, int val_max, bool nonzero) {
    const int prec = ctx_->prec;
    const int lo = std::min(val_min, val_max);
    std::vector<FieldElem> window;
    window.reserve(static_cast<std::size_t>(prec - lo));
    bool any = false;
    for (int e = lo; e < prec; ++e) {
        // Sparse-ish draws keep printed failures short.
        FieldElem c = uniform_int(0, 2) == 0 ? scalar() : FieldElem::zero(ctx_->field);
        if (e == val_max && !any && nonzero) c = scalar(true);
        if (!c.is_zero()) any = true;
        window.push_back(c);
    }
    if (!any) return Series(ctx_->field, prec);
    return Series(ctx_->field, lo, std::move(window), prec);
}

Series Sampler::unit_series(bool constant_term_one) {
    std::vector<FieldElem> window;
    window.reserve(static_cast<std::size_t>(ctx_->prec));
    window.push_back(constant_term_one ? FieldElem::one(ctx_->field) : scalar(true));
    for (int e = 1; e < ctx_->prec; ++e) {
        window.push_back(uniform_int(0, 2) == 0 ? scalar() : FieldElem::zero(ctx_->field));
    }
    return Series(ctx_->field, 0, std::move(window), ctx_->prec);
}

SkewPoly Sampler::skew(RingTag tag, int deg_max, int val_min, int val_max) {
    std::map<int, Series> m;
    const int lo = tag == RingTag::S ? std::max(val_min, 0) : val_min;
    for (int i = 0; i <= deg_max; ++i) {
        if (uniform_int(0, 1) == 0) continue;
        Series c = series(lo, std::max(lo, val_max));
        if (!c.is_zero()) m.emplace(i, std::move(c));
    }
    return SkewPoly::from_coeffs(ctx_, tag, std::move(m));
}

SkewPoly Sampler::nonzero_skew(RingTag tag, int deg_max, int val_min, int val_max) {
    for (int tries = 0; tries < 64; ++tries) {
        SkewPoly z = skew(tag, deg_max, val_min, val_max);
        if (!z.is_zero()) return z;
    }
    const int lo = tag == RingTag::S ? std::max(val_min, 0) : val_min;
    return SkewPoly::from_coeffs(
        ctx_, tag, {{uniform_int(0, deg_max), series(lo, std::max(lo, val_max), true)}});
}

SkewPoly Sampler::type_b(int l) {
    if (l < 1) throw usage_error("type B elements have degree >= 1");
    std::map<int, Series> m;
    Series one = Series::one(ctx_->field, ctx_->prec);
    m.emplace(0, one + series(1, 2));
    for (int i = 1; i < l; ++i) {
        Series c = series(1, 2);
        if (!c.is_zero()) m.emplace(i, std::move(c));
    }
    m.emplace(l, series(1, 2, true));
    return SkewPoly::from_coeffs(ctx_, RingTag::S, std::move(m));
}

SkewPoly Sampler::type_c(int n) {
    if (n < 1) throw usage_error("type C elements have degree >= 1");
    std::map<int, Series> m;
    m.emplace(0, series(0, 0, true));  // valuation 0: nonzero constant term
    for (int i = 1; i < n; ++i) {
        Series c = series(0, 2);
        if (!c.is_zero()) m.emplace(i, std::move(c));
    }
    m.emplace(n, Series::one(ctx_->field, ctx_->prec));
    return SkewPoly::from_coeffs(ctx_, RingTag::S, std::move(m));
}

SkewPoly Sampler::notirr_admissible(int n, int m, bool f_n_constant_one) {
    if (!(1 <= n && n < m)) throw usage_error("need 1 <= n < m");
    std::map<int, Series> coeffs;
    for (int i = 0; i < n; ++i) {
        Series c = series(0, 2);
        if (!c.is_zero()) coeffs.emplace(i, std::move(c));
    }
    coeffs.emplace(n, f_n_constant_one ? unit_series(true) : unit_series(false));
    for (int i = n + 1; i < m; ++i) {
        Series c = series(1, 3);
        if (!c.is_zero()) coeffs.emplace(i, std::move(c));
    }
    coeffs.emplace(m, series(1, 3, true));
    return SkewPoly::from_coeffs(ctx_, RingTag::S, std::move(coeffs));
}

}  // namespace skewseries
