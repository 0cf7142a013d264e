#include "skewseries/taxonomy.hpp"

#include <utility>

#include "skewseries/errors.hpp"

namespace skewseries {

Shape Shape::type_c(std::vector<FieldElem> f_coeffs) {
    if (f_coeffs.size() < 2 || !f_coeffs.back().is_one()) {
        throw usage_error("type C requires a monic mod-X image of degree >= 1");
    }
    Shape s{Kind::TypeC, std::move(f_coeffs), 0};
    s.n = static_cast<int>(s.f.size()) - 1;
    return s;
}

std::string Shape::describe() const {
    switch (kind) {
        case Kind::Unit: return "unit";
        case Kind::TypeA_X: return "A:X";
        case Kind::TypeA_Theta: return "A:theta";
        case Kind::TypeB: return "B";
        case Kind::TypeC: return "C";
    }
    return "?";
}

namespace {

// z * theta^b for b >= 0: a plain exponent shift, no twist is involved.
SkewPoly times_theta_power(const SkewPoly& z, int b) {
    std::map<int, Series> out;
    for (const auto& [i, s] : z.coeffs()) {
        out.emplace(i + b, s);
    }
    return SkewPoly::from_coeffs(z.ctx(), z.tag(), std::move(out));
}

// Reads the mod-X image of z as a dense coefficient list of length deg+1.
// Requires every stored entry to be known at least mod X.
std::vector<FieldElem> mod_x_image(const SkewPoly& z) {
    if (z.effective_prec() < 1) {
        throw precision_error("the mod-X image needs at least one X-digit of precision");
    }
    std::vector<FieldElem> f(static_cast<std::size_t>(z.degree()) + 1,
                             FieldElem::zero(z.ctx()->field));
    for (const auto& [i, s] : z.coeffs()) {
        if (i < static_cast<int>(f.size())) {
            f[static_cast<std::size_t>(i)] = s.coeff(0);
        }
    }
    while (f.size() > 1 && f.back().is_zero()) {
        f.pop_back();
    }
    return f;
}

}  // namespace

SkewPoly NormalizationCertificate::reassemble() const {
    SkewPoly out = unit * core;
    if (x_exp != 0) {
        out = Series::x_power(core.ctx()->field, x_exp, core.ctx()->prec) * out;
    }
    return times_theta_power(out, theta_exp);
}

NormalizationCertificate strip_and_classify(const SkewPoly& z) {
    if (z.is_zero()) {
        throw usage_error("cannot classify the zero element");
    }
    if (z.min_val() < 0) {
        throw usage_error("classification applies to elements of S; lift first");
    }
    ContextPtr ctx = z.ctx();

    const int a = z.min_val();
    SkewPoly stripped = z.with_tag(RingTag::S);
    if (a > 0) {
        stripped = Series::x_power(ctx->field, -a, ctx->prec) * stripped.with_tag(RingTag::T);
        stripped = stripped.with_tag(RingTag::S);
    }

    int b = 0;
    for (const auto& [i, s] : stripped.coeffs()) {
        if (!s.is_zero()) {
            b = i;
            break;
        }
    }
    if (b > 0) {
        // Entries below theta^b are zero at reduced precision; dropping them is
        // accounted for by the verified certificate precision below.
        std::map<int, Series> shiftdown;
        for (const auto& [i, s] : stripped.coeffs()) {
            if (i >= b) {
                shiftdown.emplace(i - b, s);
            }
        }
        stripped = SkewPoly::from_coeffs(ctx, RingTag::S, std::move(shiftdown));
    }

    std::vector<FieldElem> fbar = mod_x_image(stripped);
    const int nbar = static_cast<int>(fbar.size()) - 1;
    const FieldElem u = fbar.back();
    SkewPoly core = u.inv() * stripped;

    Shape shape = Shape::unit();
    if (stripped.degree() == 0) {
        shape = Shape::unit();
    } else if (nbar == 0) {
        shape = Shape::type_b();
    } else {
        std::vector<FieldElem> monic;
        monic.reserve(fbar.size());
        FieldElem uinv = u.inv();
        for (const auto& c : fbar) {
            monic.push_back(uinv * c);
        }
        shape = Shape::type_c(std::move(monic));
    }

    NormalizationCertificate cert{a, b, u, std::move(core), std::move(shape), 0};
    SkewPoly diff = z.with_tag(RingTag::T) - cert.reassemble().with_tag(RingTag::T);
    if (!diff.is_zero()) {
        throw error("normalization self-check failed");
    }
    cert.prec = diff.effective_prec();
    return cert;
}

std::optional<EisensteinCertificate> eisenstein_irreducible(const SkewPoly& z) {
    if (z.is_zero() || z.min_val() < 0) {
        return std::nullopt;
    }
    const int m = z.degree();
    if (m < 1) {
        return std::nullopt;
    }
    // val(z_0) = 0 and val(z_m) = 1 need one resp. two known digits.
    Series z0 = z.coeff(0);
    Series zm = z.coeff(m);
    if (z0.abs_prec() < 1 || zm.abs_prec() < 2) {
        return std::nullopt;
    }
    if (z0.is_zero() || z0.val() != 0) {
        return std::nullopt;
    }
    if (zm.is_zero() || zm.val() != 1) {
        return std::nullopt;
    }
    for (const auto& [i, s] : z.coeffs()) {
        if (i >= 1 && i <= m && s.eff_val() < 1) {
            return std::nullopt;
        }
    }
    return EisensteinCertificate{m, z.effective_prec()};
}

bool condition_CO(const SkewPoly& z) {
    if (z.is_zero()) {
        return false;
    }
    if (z.min_val() < 0) {
        throw usage_error("condition (CO) applies to elements of S");
    }
    std::vector<FieldElem> fbar = mod_x_image(z);
    return fbar.size() == 1 && !fbar.front().is_zero();
}

NotirrHypothesis notirr_hypothesis(const SkewPoly& z) {
    if (z.is_zero()) {
        return {false, 0, 0, "the zero element has no factorization shape"};
    }
    if (z.min_val() < 0) {
        return {false, 0, 0, "a coefficient has negative valuation; the element is not in S"};
    }
    if (z.effective_prec() < 1) {
        return {false, 0, z.degree(), "insufficient precision to read the mod-X image"};
    }
    const int m = z.degree();
    int n = -1;
    for (const auto& [i, s] : z.coeffs()) {
        if (!s.is_zero() && s.val() == 0) {
            n = std::max(n, i);
        }
    }
    if (n < 0) {
        return {false, 0, m, "every coefficient is divisible by X"};
    }
    if (n == m) {
        return {false, n, m, "the largest unit coefficient is the leading one"};
    }
    if (n == 0) {
        return {false, n, m, "the only unit coefficient is the constant term"};
    }
    return {true, n, m, ""};
}

}  // namespace skewseries
