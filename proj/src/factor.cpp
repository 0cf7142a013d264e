#include "skewseries/factor.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewseries/errors.hpp"
#include "skewseries/linsolve.hpp"

namespace skewseries {

namespace {

using boost::multiprecision::cpp_int;

// ---- small dense k[theta] helpers (the mod-X image lives in a commutative
// ---- polynomial ring, since alpha fixes constant terms) ----

using KPoly = std::vector<FieldElem>;  // ascending, trimmed (empty == 0)

KPoly kp_trim(KPoly v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

int kp_deg(const KPoly& v) { return static_cast<int>(v.size()) - 1; }

KPoly kp_mul(const KPoly& a, const KPoly& b, Field field) {
    if (a.empty() || b.empty()) return {};
    KPoly c(a.size() + b.size() - 1, FieldElem::zero(field));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return kp_trim(std::move(c));
}

KPoly kp_shift(const KPoly& a, int s, Field field) {
    if (a.empty()) return {};
    KPoly c(static_cast<std::size_t>(s), FieldElem::zero(field));
    c.insert(c.end(), a.begin(), a.end());
    return c;
}

std::pair<KPoly, KPoly> kp_divmod(const KPoly& a, const KPoly& b, Field field) {
    KPoly r = a;
    if (b.empty()) throw usage_error("polynomial division by zero");
    KPoly q;
    FieldElem lead_inv = b.back().inv();
    while (kp_deg(r) >= kp_deg(b)) {
        int k = kp_deg(r) - kp_deg(b);
        FieldElem c = r.back() * lead_inv;
        if (kp_deg(q) < k) q.resize(static_cast<std::size_t>(k) + 1, FieldElem::zero(field));
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[static_cast<std::size_t>(k) + j] = r[static_cast<std::size_t>(k) + j] - c * b[j];
        r = kp_trim(std::move(r));
        if (r.empty()) break;
    }
    return {kp_trim(std::move(q)), std::move(r)};
}

bool kp_divides(const KPoly& d, const KPoly& a, Field field) {
    return kp_divmod(a, d, field).second.empty();
}

KPoly kp_monic(const KPoly& a) {
    if (a.empty()) return a;
    KPoly out;
    out.reserve(a.size());
    FieldElem inv = a.back().inv();
    for (const auto& c : a) out.push_back(inv * c);
    return out;
}

FieldElem kp_eval(const KPoly& a, const FieldElem& x) {
    FieldElem acc = FieldElem::zero(x.field());
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

// Synthetic division of f by (theta - r); f(r) must be zero.
KPoly kp_deflate(const KPoly& f, const FieldElem& r) {
    KPoly g(f.size() - 1, FieldElem::zero(r.field()));
    FieldElem carry = FieldElem::zero(r.field());
    for (std::size_t i = f.size(); i-- > 1;) {
        carry = f[i] + r * carry;
        g[i - 1] = carry;
    }
    return kp_trim(std::move(g));
}

bool fe_less(const FieldElem& a, const FieldElem& b) {
    if (a.field().is_prime_field()) return a.residue() < b.residue();
    return a.rational() < b.rational();
}

bool kp_eq(const KPoly& a, const KPoly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// Degree first, then coefficients from the top down: a deterministic total
// order giving the "degree-lex, first solution wins" candidate schedule.
bool kp_less(const KPoly& a, const KPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return fe_less(a[i], b[i]);
    }
    return false;
}

FieldElem fe_pow(FieldElem base, int e) {
    FieldElem acc = FieldElem::one(base.field());
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

// Bounded trial division; for huge inputs only the divisors with a small
// cofactor partner are found, which keeps the root search best-effort.
std::vector<cpp_int> positive_divisors(cpp_int n) {
    if (n < 0) n = -n;
    std::vector<cpp_int> out;
    if (n == 0) return out;
    for (cpp_int d = 1; d * d <= n && d <= 1000000; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Roots in k with multiplicity: exhaustive over F_p, rational-root candidates
// over Q. Deterministically ordered.
std::vector<FieldElem> poly_roots(KPoly f, Field field) {
    std::vector<FieldElem> roots;
    f = kp_trim(std::move(f));
    if (kp_deg(f) < 1) return roots;

    if (field.is_prime_field()) {
        for (std::int64_t x = 0; x < field.modulus() && kp_deg(f) >= 1; ++x) {
            FieldElem r(field, static_cast<long>(x));
            while (kp_deg(f) >= 1 && kp_eval(f, r).is_zero()) {
                roots.push_back(r);
                f = kp_deflate(f, r);
            }
        }
        return roots;
    }

    FieldElem zero = FieldElem::zero(field);
    while (kp_deg(f) >= 1 && f.front().is_zero()) {
        roots.push_back(zero);
        f.erase(f.begin());
    }
    if (kp_deg(f) < 1) return roots;

    cpp_int denom_lcm = 1;
    for (const auto& c : f) {
        denom_lcm = boost::multiprecision::lcm(denom_lcm,
                                               boost::multiprecision::denominator(c.rational()));
    }
    std::vector<cpp_int> ic;
    ic.reserve(f.size());
    for (const auto& c : f) {
        Rational scaled = c.rational() * Rational(denom_lcm);
        ic.push_back(boost::multiprecision::numerator(scaled));
    }
    std::vector<FieldElem> cands;
    for (const cpp_int& u : positive_divisors(ic.front())) {
        for (const cpp_int& v : positive_divisors(ic.back())) {
            Rational r(u, v);
            cands.emplace_back(field, r);
            cands.emplace_back(field, Rational(-r));
        }
    }
    std::sort(cands.begin(), cands.end(), fe_less);
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands) {
        while (kp_deg(f) >= 1 && kp_eval(f, r).is_zero()) {
            roots.push_back(r);
            f = kp_deflate(f, r);
        }
    }
    return roots;
}

// Multiplicative pieces of the monic mod-X image: linear factors from roots,
// further bounded-degree irreducibles over F_p, plus one unfactored leftover.
std::vector<KPoly> modx_pieces(const KPoly& fbar_in, Field field) {
    std::vector<KPoly> pieces;
    KPoly rem = kp_monic(kp_trim(fbar_in));
    for (const auto& r : poly_roots(rem, field)) {
        pieces.push_back(KPoly{-r, FieldElem::one(field)});
        rem = kp_deflate(rem, r);
    }
    if (field.is_prime_field()) {
        const std::int64_t p = field.modulus();
        for (int d = 2; d <= kp_deg(rem);) {
            double count = 1.0;
            for (int i = 0; i < d; ++i) count *= static_cast<double>(p);
            if (count > 2048.0) break;
            bool found = false;
            std::vector<std::int64_t> odo(static_cast<std::size_t>(d), 0);
            while (true) {
                KPoly g;
                g.reserve(static_cast<std::size_t>(d) + 1);
                for (std::int64_t c : odo) g.emplace_back(field, static_cast<long>(c));
                g.push_back(FieldElem::one(field));
                while (kp_deg(rem) >= d && kp_divides(g, rem, field)) {
                    // Ascending degree makes every divisor found here irreducible.
                    pieces.push_back(g);
                    rem = kp_divmod(rem, g, field).first;
                    found = true;
                }
                std::size_t pos = 0;
                while (pos < odo.size() && ++odo[pos] == p) odo[pos++] = 0;
                if (pos == odo.size()) break;
            }
            if (!found) ++d;
        }
    }
    if (kp_deg(rem) >= 1) pieces.push_back(rem);
    return pieces;
}

// All monic divisors of the mod-X image assembled from its pieces, with degree
// in [1, max_deg], in degree-lex order.
std::vector<KPoly> divisor_candidates(const KPoly& fbar, int max_deg, Field field) {
    std::vector<KPoly> pieces = modx_pieces(fbar, field);
    std::vector<KPoly> cands;
    const std::size_t np = pieces.size();
    if (np == 0 || np > 16) return cands;
    for (std::size_t mask = 1; mask < (std::size_t{1} << np); ++mask) {
        KPoly prod{FieldElem::one(field)};
        for (std::size_t i = 0; i < np; ++i) {
            if (mask & (std::size_t{1} << i)) prod = kp_mul(prod, pieces[i], field);
        }
        int deg = kp_deg(prod);
        if (deg >= 1 && deg <= max_deg) cands.push_back(std::move(prod));
    }
    std::sort(cands.begin(), cands.end(), kp_less);
    cands.erase(std::unique(cands.begin(), cands.end(), kp_eq), cands.end());
    if (cands.size() > 512) cands.resize(512);
    return cands;
}

std::vector<FieldElem> mod_x_coeffs(const SkewPoly& z) {
    if (z.effective_prec() < 1) {
        throw precision_error("the mod-X image needs at least one X-digit of precision");
    }
    std::vector<FieldElem> f(static_cast<std::size_t>(z.degree()) + 1,
                             FieldElem::zero(z.ctx()->field));
    for (const auto& [i, s] : z.coeffs()) {
        if (i < static_cast<int>(f.size())) f[static_cast<std::size_t>(i)] = s.coeff(0);
    }
    return f;
}

struct SearchHit {
    SkewPoly divisor;
    SkewPoly quotient;
};

// X-degree-by-X-degree lift of the mod-X candidate gbar to a monic right
// divisor of w. At layer ell the correction X^ell * T (T in k[theta], deg < n)
// changes the remainder by -X^ell * rem(qtw * T, gbar) with
// qtw = sum_j Q_j(0) q(0)^{j*ell} theta^j, an exact k-linear system in T's
// coefficients. Underdetermined layers take the filler value; a wrong filler
// shows up as a later inconsistent layer and fails the attempt.
std::optional<SearchHit> lift_candidate(const SkewPoly& w, const KPoly& gbar,
                                        const FieldElem& filler) {
    ContextPtr ctx = w.ctx();
    const Field field = ctx->field;
    const int n = kp_deg(gbar);
    const FieldElem q0 = ctx->alpha.q().coeff(0);

    std::map<int, Series> dm;
    for (int i = 0; i <= n; ++i) {
        dm.emplace(i, Series::constant(gbar[static_cast<std::size_t>(i)], ctx->prec));
    }
    SkewPoly d = SkewPoly::from_coeffs(ctx, w.tag(), std::move(dm));

    // One correction layer per pass: after the pass for X^ell the remainder is
    // required to vanish through X^ell. A remainder that already vanishes
    // deeper does NOT mean the divisor is correct that deep (agreement of the
    // remainder is weaker than agreement of the divisor), so the schedule
    // walks every layer and lets the filler probe the homogeneous directions.
    for (int ell = 1; ell < ctx->prec; ++ell) {
        DivisionResult div = right_divmod(w, d);
        if (div.remainder.is_zero()) {
            return SearchHit{std::move(d), std::move(div.quotient)};
        }
        if (div.remainder.min_val() < ell) return std::nullopt;

        std::vector<FieldElem> rhs(static_cast<std::size_t>(n), FieldElem::zero(field));
        for (const auto& [i, s] : div.remainder.coeffs()) {
            if (s.abs_prec() <= ell) return std::nullopt;
            if (i < n) rhs[static_cast<std::size_t>(i)] = s.coeff(ell);
        }
        KPoly qtw(static_cast<std::size_t>(div.quotient.degree()) + 1, FieldElem::zero(field));
        for (const auto& [j, s] : div.quotient.coeffs()) {
            if (s.abs_prec() < 1) return std::nullopt;
            if (j < static_cast<int>(qtw.size()))
                qtw[static_cast<std::size_t>(j)] = s.coeff(0) * fe_pow(q0, j * ell);
        }
        qtw = kp_trim(std::move(qtw));

        LinearSystem sys;
        sys.a.assign(static_cast<std::size_t>(n),
                     std::vector<FieldElem>(static_cast<std::size_t>(n), FieldElem::zero(field)));
        sys.rhs = rhs;
        for (int i = 0; i < n; ++i) {
            KPoly col = kp_divmod(kp_shift(qtw, i, field), gbar, field).second;
            for (int e = 0; e < n && e < static_cast<int>(col.size()); ++e) {
                sys.a[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] =
                    col[static_cast<std::size_t>(e)];
            }
        }
        auto t = solve(sys, field, filler);
        if (!t) return std::nullopt;

        std::map<int, Series> tm;
        for (int i = 0; i < n; ++i) {
            if (!(*t)[static_cast<std::size_t>(i)].is_zero()) {
                tm.emplace(i, Series::constant((*t)[static_cast<std::size_t>(i)], ctx->prec));
            }
        }
        if (!tm.empty()) {
            SkewPoly corr = SkewPoly::from_coeffs(ctx, w.tag(), std::move(tm));
            d = d + Series::x_power(field, ell, ctx->prec) * corr;
        }
    }
    DivisionResult fin = right_divmod(w, d);
    if (fin.remainder.is_zero()) {
        return SearchHit{std::move(d), std::move(fin.quotient)};
    }
    return std::nullopt;
}

std::optional<SearchHit> bounded_right_factor_search(const SkewPoly& w) {
    const int m = w.degree();
    if (m < 2 || w.effective_prec() < 1) return std::nullopt;
    const Field field = w.ctx()->field;
    KPoly fbar = kp_trim(mod_x_coeffs(w));
    if (fbar.empty()) return std::nullopt;

    const std::vector<KPoly> cands = divisor_candidates(fbar, m - 1, field);
    const long fillers[] = {0, 1, -1, 2, -2};
    for (const KPoly& g : cands) {
        for (long fv : fillers) {
            if (auto hit = lift_candidate(w, g, FieldElem(field, fv))) {
                return hit;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ExtractResult extract_right_factor(const SkewPoly& z) {
    NotirrHypothesis hyp = notirr_hypothesis(z);
    if (!hyp.ok) {
        return ExtractResult{std::nullopt, hyp.failed_clause};
    }
    ContextPtr ctx = z.ctx();
    const int n = hyp.n;
    SkewPoly zs = z.with_tag(RingTag::S);
    const Series fn = zs.coeff(n);
    SkewPoly zt = inverse(fn) * zs;  // coefficient n becomes exactly 1

    // Seed with the low part of the normalized element; each pass then gains
    // at least one X-digit: with z~ = Q d + r one has, after d <- d + r,
    // a new remainder rem((1 - Q) r, d + r) and 1 - Q == 0 mod X.
    std::map<int, Series> seed;
    seed.emplace(n, Series::one(ctx->field, ctx->prec));
    for (const auto& [i, s] : zt.coeffs()) {
        if (i < n) seed.emplace(i, s);
    }
    SkewPoly d = SkewPoly::from_coeffs(ctx, RingTag::S, std::move(seed));

    SkewPoly quotient = SkewPoly::zero(ctx, RingTag::S);
    bool converged = false;
    for (int pass = 0; pass <= ctx->prec + 2; ++pass) {
        DivisionResult div = right_divmod(zt, d);
        if (div.remainder.is_zero()) {
            quotient = std::move(div.quotient);
            converged = true;
            break;
        }
        d = d + div.remainder;
    }
    if (!converged) {
        return ExtractResult{std::nullopt, "the refinement failed to converge; precision exhausted"};
    }

    quotient = fn * quotient;
    SkewPoly diff = zs - quotient * d;
    if (!diff.is_zero()) {
        throw error("extraction self-check failed");
    }
    std::vector<Series> h;
    h.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        h.push_back(-d.coeff(i));
    }
    return ExtractResult{
        RightFactorWitness{std::move(d), std::move(quotient), diff.effective_prec(),
                           std::move(h), n},
        ""};
}

CanonicalizeResult canonicalize_typeC(const SkewPoly& c) {
    if (c.is_zero()) {
        throw usage_error("cannot canonicalize the zero element");
    }
    NormalizationCertificate cert = strip_and_classify(c);
    if (cert.shape.kind != Shape::Kind::TypeC || cert.x_exp != 0 || cert.theta_exp != 0) {
        throw usage_error("input is not a type C element");
    }
    const int m = c.degree();
    if (cert.shape.n == m) {
        // The leading theta-coefficient has a nonzero constant term, hence is a unit.
        Series u = inverse(c.coeff(m));
        SkewPoly c_hat = u * c;
        return CanonicalizeResult{CanonicalizeResult::Kind::Canonical, std::move(c_hat),
                                  std::move(u), std::nullopt};
    }
    // Otherwise the largest unit-coefficient index is exactly n < m, so the
    // extraction hypothesis holds and the element splits.
    ExtractResult ex = extract_right_factor(c);
    if (!ex.ok()) {
        throw precision_error("extraction under a holding hypothesis failed: " + ex.failure);
    }
    return CanonicalizeResult{CanonicalizeResult::Kind::ReducibleInstead, std::nullopt,
                              std::nullopt, std::move(ex.witness)};
}

CommuteResult commute_CB(const SkewPoly& c, const SkewPoly& b) {
    if (c.ctx() != b.ctx()) {
        throw usage_error("operands come from different ring contexts");
    }
    ContextPtr ctx = c.ctx();
    if (c.is_zero() || c.min_val() < 0 || c.degree() < 1) {
        throw usage_error("c must be a type C element of S with degree >= 1");
    }
    if (b.is_zero() || b.min_val() < 0 || b.degree() < 1) {
        throw usage_error("b must be a type B element of S with degree >= 1");
    }
    if (!eq_mod(b, SkewPoly::scalar(ctx, RingTag::S, FieldElem::one(ctx->field)), 1)) {
        throw usage_error("b must be congruent to 1 mod XS");
    }

    // A non-canonical c is first brought to its canonical form c_hat = u*c; the
    // witness is rescaled back at the end so that it pairs with the original c.
    CanonicalizeResult canon = canonicalize_typeC(c);
    if (canon.kind != CanonicalizeResult::Kind::Canonical) {
        throw usage_error(
            "c has no canonical type C form (its leading coefficient is not a unit)");
    }
    const SkewPoly& c_hat = *canon.c_hat;
    const int nc = c_hat.degree();

    const int nb = b.degree();
    SkewPoly product = c.with_tag(RingTag::S) * b.with_tag(RingTag::S);
    ExtractResult ex = extract_right_factor(c_hat.with_tag(RingTag::S) * b.with_tag(RingTag::S));
    if (!ex.ok()) {
        return CommuteResult{std::nullopt, "extraction failed on cb: " + ex.failure};
    }
    RightFactorWitness w = std::move(*ex.witness);
    if (w.n != nc) {
        return CommuteResult{std::nullopt, "extracted right factor has degree " +
                                               std::to_string(w.n) + ", expected deg c = " +
                                               std::to_string(nc)};
    }
    const SkewPoly& c_prime = w.divisor;
    // c*b = u^{-1} * (c_hat*b) = (u^{-1} * quotient) * divisor.
    SkewPoly b_prime = inverse(*canon.u) * w.quotient;
    if (c_prime.coeff(0).is_zero()) {
        return CommuteResult{std::nullopt,
                             "c' lost its constant theta-coefficient at the working precision"};
    }
    if (b_prime.is_zero() || b_prime.degree() != nb) {
        return CommuteResult{std::nullopt, "b' does not have degree deg b"};
    }
    if (!condition_CO(b_prime)) {
        return CommuteResult{std::nullopt, "b' is not congruent to a unit mod XS"};
    }
    SkewPoly diff = product - b_prime * c_prime;
    if (!diff.is_zero()) {
        return CommuteResult{std::nullopt, "product identity cb = b'c' failed the recheck"};
    }
    return CommuteResult{CommutationWitness{b_prime, c_prime, diff.effective_prec()}, ""};
}

namespace {

void split_core(const SkewPoly& w, std::vector<FactorEntry>& out) {
    ContextPtr ctx = w.ctx();
    NormalizationCertificate cert = strip_and_classify(w);
    for (int i = 0; i < cert.x_exp; ++i) {
        out.push_back(FactorEntry{SkewPoly::x(ctx, RingTag::S), Shape::atom_x(), false,
                                  std::nullopt});
    }
    if (!cert.unit.is_one()) {
        out.push_back(FactorEntry{SkewPoly::scalar(ctx, RingTag::S, cert.unit), Shape::unit(),
                                  false, std::nullopt});
    }

    const SkewPoly& core = cert.core;
    switch (cert.shape.kind) {
        case Shape::Kind::Unit: {
            SkewPoly one = SkewPoly::scalar(ctx, RingTag::S, FieldElem::one(ctx->field));
            if (!(core - one).is_zero()) {
                out.push_back(FactorEntry{core, Shape::unit(), false, std::nullopt});
            }
            break;
        }
        case Shape::Kind::TypeB: {
            // A monic right factor would need a monic mod-X image dividing 1,
            // so type B elements are atoms for this search by construction.
            out.push_back(FactorEntry{core, cert.shape, true, eisenstein_irreducible(core)});
            break;
        }
        case Shape::Kind::TypeC: {
            NotirrHypothesis hyp = notirr_hypothesis(core);
            if (hyp.ok) {
                ExtractResult ex = extract_right_factor(core);
                if (ex.ok()) {
                    split_core(ex.witness->quotient, out);
                    split_core(ex.witness->divisor, out);
                    break;
                }
            }
            if (auto hit = bounded_right_factor_search(core)) {
                split_core(hit->quotient, out);
                split_core(hit->divisor, out);
                break;
            }
            out.push_back(FactorEntry{core, cert.shape, true, eisenstein_irreducible(core)});
            break;
        }
        default:
            // strip_and_classify never yields the A shapes for a core.
            throw error("unexpected core shape");
    }

    for (int i = 0; i < cert.theta_exp; ++i) {
        out.push_back(FactorEntry{SkewPoly::theta(ctx, RingTag::S), Shape::atom_theta(), false,
                                  std::nullopt});
    }
}

}  // namespace

FactorizationReport factor_best_effort(const SkewPoly& z) {
    if (z.is_zero()) {
        throw usage_error("cannot factor the zero element");
    }
    ContextPtr ctx = z.ctx();
    FactorizationReport rep;
    split_core(z, rep.factors);

    SkewPoly prod = SkewPoly::scalar(ctx, RingTag::S, FieldElem::one(ctx->field));
    for (const auto& e : rep.factors) {
        prod = prod * e.factor;
    }
    SkewPoly diff = z.with_tag(RingTag::T) - prod.with_tag(RingTag::T);
    rep.product_verified = diff.is_zero();
    rep.prec = rep.product_verified ? diff.effective_prec() : 0;
    return rep;
}

}  // namespace skewseries
