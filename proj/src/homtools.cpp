#include "skewseries/homtools.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "skewseries/errors.hpp"
#include "skewseries/euclid.hpp"
#include "skewseries/linsolve.hpp"

namespace skewseries {

std::string to_string(SimilarityCheck check) {
    switch (check) {
        case SimilarityCheck::Verified: return "verified";
        case SimilarityCheck::RefutedDegree: return "refuted: theta-degrees differ";
        case SimilarityCheck::RefutedGcrdClause: return "refuted: gcrd(u, b) is not a unit";
        case SimilarityCheck::RefutedLclmClause:
            return "refuted: lclm(u, b) is not an associate of a*u";
    }
    return "?";
}

SimilarityCheck verify_similarity(const SkewPoly& a, const SkewPoly& b, const SkewPoly& u) {
    if (a.ctx() != b.ctx() || a.ctx() != u.ctx()) {
        throw usage_error("operands come from different ring contexts");
    }
    if (a.is_zero() || b.is_zero() || u.is_zero()) {
        throw usage_error("similarity is checked between nonzero elements with a nonzero witness");
    }
    if (a.degree() != b.degree()) {
        return SimilarityCheck::RefutedDegree;
    }
    SkewPoly at = a.with_tag(RingTag::T);
    SkewPoly bt = b.with_tag(RingTag::T);
    SkewPoly ut = u.with_tag(RingTag::T);

    GcrdResult g = gcrd(ut, bt);
    if (g.g.degree() != 0) {
        return SimilarityCheck::RefutedGcrdClause;
    }
    // gcrd(u, b) a unit makes t -> t*u injective T/Ta -> T/Tb; the lclm clause
    // pins its image: lclm(u, b) generates Tb cap (the pullback of T a u).
    SkewPoly l = lclm(ut, bt);
    SkewPoly r = monic_normalize(at * ut);
    return (l - r).is_zero() ? SimilarityCheck::Verified : SimilarityCheck::RefutedLclmClause;
}

namespace {

int witness_prec(const SkewPoly& a, const SkewPoly& b, const SkewPoly& u) {
    SkewPoly l = lclm(u.with_tag(RingTag::T), b.with_tag(RingTag::T));
    SkewPoly r = monic_normalize(a.with_tag(RingTag::T) * u.with_tag(RingTag::T));
    return (l - r).effective_prec();
}

}  // namespace

SimilaritySearchResult search_similarity(const SkewPoly& a, const SkewPoly& b, int deg_bound) {
    if (a.ctx() != b.ctx()) {
        throw usage_error("operands come from different ring contexts");
    }
    if (a.is_zero() || b.is_zero()) {
        throw usage_error("similarity search needs nonzero elements");
    }
    if (a.degree() != b.degree()) {
        return SimilaritySearchResult{std::nullopt, deg_bound, "degree mismatch"};
    }
    ContextPtr ctx = a.ctx();
    const Field field = ctx->field;
    const int bound = deg_bound > 0 ? deg_bound : std::max(b.degree(), 1);
    SkewPoly at = a.with_tag(RingTag::T);
    SkewPoly bt = b.with_tag(RingTag::T);

    // u is a similarity witness only if a*u lands in Tb, i.e. the right
    // remainder of a*u by b vanishes; that condition is k-linear in u's
    // coefficients, so candidates come from a kernel computation and are then
    // filtered through the full verification.
    for (int vlo = 0; vlo >= -2; --vlo) {
        std::vector<std::pair<int, int>> cols;  // (theta index, X exponent)
        std::vector<SkewPoly> rems;
        bool attempt_ok = true;
        for (int i = 0; i < bound && attempt_ok; ++i) {
            for (int p = vlo; p < ctx->prec; ++p) {
                SkewPoly basis = SkewPoly::from_coeffs(
                    ctx, RingTag::T, {{i, Series::x_power(field, p, ctx->prec)}});
                try {
                    rems.push_back(right_divmod(at * basis, bt).remainder);
                } catch (const error&) {
                    attempt_ok = false;
                    break;
                }
                cols.emplace_back(i, p);
            }
        }
        if (!attempt_ok || cols.empty()) continue;

        int elo = 0;
        int ehi = ctx->prec;
        for (const SkewPoly& r : rems) {
            for (const auto& [j, s] : r.coeffs()) {
                elo = std::min(elo, s.eff_val());
                ehi = std::min(ehi, s.abs_prec());
            }
        }
        if (ehi <= elo) continue;

        const int dj = std::max(b.degree(), 1);
        std::vector<std::vector<FieldElem>> mat(
            static_cast<std::size_t>(dj) * static_cast<std::size_t>(ehi - elo),
            std::vector<FieldElem>(cols.size(), FieldElem::zero(field)));
        for (std::size_t col = 0; col < cols.size(); ++col) {
            for (const auto& [j, s] : rems[col].coeffs()) {
                if (j >= dj) continue;
                for (int e = std::max(elo, s.eff_val()); e < std::min(ehi, s.abs_prec()); ++e) {
                    std::size_t row = static_cast<std::size_t>(j) *
                                          static_cast<std::size_t>(ehi - elo) +
                                      static_cast<std::size_t>(e - elo);
                    mat[row][col] = s.coeff(e);
                }
            }
        }

        for (const auto& vec : kernel_basis(mat, field)) {
            std::map<int, Series> um;
            for (std::size_t col = 0; col < cols.size(); ++col) {
                if (vec[col].is_zero()) continue;
                auto [i, p] = cols[col];
                Series term = vec[col] * Series::x_power(field, p, ctx->prec);
                auto it = um.find(i);
                if (it == um.end()) {
                    um.emplace(i, std::move(term));
                } else {
                    it->second = it->second + term;
                }
            }
            SkewPoly u = SkewPoly::from_coeffs(ctx, RingTag::T, std::move(um));
            if (u.is_zero()) continue;
            try {
                if (verify_similarity(a, b, u) == SimilarityCheck::Verified) {
                    int prec = witness_prec(a, b, u);
                    return SimilaritySearchResult{SimilarityWitness{std::move(u), prec}, bound,
                                                  ""};
                }
            } catch (const error&) {
                continue;
            }
        }
    }
    return SimilaritySearchResult{std::nullopt, bound, "not found up to bound"};
}

namespace {

std::optional<std::vector<FieldElem>> mod_x_list(const SkewPoly& z) {
    if (z.effective_prec() < 1) return std::nullopt;
    std::vector<FieldElem> f(static_cast<std::size_t>(z.degree()) + 1,
                             FieldElem::zero(z.ctx()->field));
    for (const auto& [i, s] : z.coeffs()) {
        if (i < static_cast<int>(f.size())) f[static_cast<std::size_t>(i)] = s.coeff(0);
    }
    return f;
}

FieldElem fe_pow(FieldElem base, int e) {
    FieldElem acc = FieldElem::one(base.field());
    if (e < 0) {
        base = base.inv();
        e = -e;
    }
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

// One X-layer at a time: at layer p the unknown coefficients u_i[p], v_j[p]
// enter 1 - (u*a + b*v) through the mod-X images only — the u columns via
// a_j(0), the v columns via b_i(0) q(0)^{i p} (theta^i moves X^p across at the
// cost of that scalar twist). Free variables take 0; an inconsistent layer
// aborts the attempt so the caller can escalate the bounds.
std::optional<ExtWitness> ext_layered_attempt(const SkewPoly& a, const SkewPoly& b, int du,
                                              int dv, int vlo) {
    ContextPtr ctx = a.ctx();
    const Field field = ctx->field;
    auto amod = mod_x_list(a);
    auto bmod = mod_x_list(b);
    if (!amod || !bmod) return std::nullopt;
    const FieldElem q0 = ctx->alpha.q().coeff(0);
    const int da = a.degree();
    const int db = b.degree();
    const int rows = std::max(du - 1 + da, db + dv - 1) + 1;

    SkewPoly u = SkewPoly::zero(ctx, RingTag::T);
    SkewPoly v = SkewPoly::zero(ctx, RingTag::T);
    const SkewPoly one = SkewPoly::scalar(ctx, RingTag::T, FieldElem::one(field));
    SkewPoly resid = one;

    for (int p = vlo; p < ctx->prec; ++p) {
        if (resid.is_zero()) break;
        std::vector<FieldElem> rvec(static_cast<std::size_t>(rows), FieldElem::zero(field));
        bool layer_nonzero = false;
        for (const auto& [e, s] : resid.coeffs()) {
            if (s.abs_prec() <= p) return std::nullopt;
            if (e < rows && !s.coeff(p).is_zero()) {
                rvec[static_cast<std::size_t>(e)] = s.coeff(p);
                layer_nonzero = true;
            }
        }
        if (!layer_nonzero) continue;

        LinearSystem sys;
        sys.a.assign(static_cast<std::size_t>(rows),
                     std::vector<FieldElem>(static_cast<std::size_t>(du + dv),
                                            FieldElem::zero(field)));
        sys.rhs = rvec;
        for (int i = 0; i < du; ++i) {
            for (int j = 0; j <= da; ++j) {
                sys.a[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(i)] =
                    (*amod)[static_cast<std::size_t>(j)];
            }
        }
        for (int j = 0; j < dv; ++j) {
            for (int i = 0; i <= db; ++i) {
                sys.a[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(du + j)] =
                    (*bmod)[static_cast<std::size_t>(i)] * fe_pow(q0, i * p);
            }
        }
        auto x = solve(sys, field);
        if (!x) return std::nullopt;

        std::map<int, Series> uadd;
        std::map<int, Series> vadd;
        for (int i = 0; i < du; ++i) {
            const FieldElem& c = (*x)[static_cast<std::size_t>(i)];
            if (!c.is_zero()) uadd.emplace(i, c * Series::x_power(field, p, ctx->prec));
        }
        for (int j = 0; j < dv; ++j) {
            const FieldElem& c = (*x)[static_cast<std::size_t>(du + j)];
            if (!c.is_zero()) vadd.emplace(j, c * Series::x_power(field, p, ctx->prec));
        }
        u = u + SkewPoly::from_coeffs(ctx, RingTag::T, std::move(uadd));
        v = v + SkewPoly::from_coeffs(ctx, RingTag::T, std::move(vadd));
        resid = one - (u * a.with_tag(RingTag::T) + b.with_tag(RingTag::T) * v);
        if (!resid.is_zero() && resid.min_val() <= p) return std::nullopt;
    }
    if (!resid.is_zero()) return std::nullopt;
    return ExtWitness{std::move(u), std::move(v), resid.effective_prec()};
}

// Dense fallback: every unknown coefficient of u and v at once. Exact but
// larger; only used when the layered pass dead-ends on a committed choice.
std::optional<ExtWitness> ext_dense_attempt(const SkewPoly& a, const SkewPoly& b, int du, int dv,
                                            int vlo) {
    ContextPtr ctx = a.ctx();
    const Field field = ctx->field;
    const std::size_t ncols =
        (static_cast<std::size_t>(du) + static_cast<std::size_t>(dv)) *
        static_cast<std::size_t>(ctx->prec - vlo);
    if (ncols == 0 || ncols > 400) return std::nullopt;

    SkewPoly at = a.with_tag(RingTag::T);
    SkewPoly bt = b.with_tag(RingTag::T);
    struct Col {
        bool u_side;
        int theta;
        int xpow;
        SkewPoly prod;
    };
    std::vector<Col> cols;
    cols.reserve(ncols);
    try {
        for (int i = 0; i < du; ++i) {
            for (int p = vlo; p < ctx->prec; ++p) {
                SkewPoly basis = SkewPoly::from_coeffs(
                    ctx, RingTag::T, {{i, Series::x_power(field, p, ctx->prec)}});
                cols.push_back(Col{true, i, p, basis * at});
            }
        }
        for (int j = 0; j < dv; ++j) {
            for (int p = vlo; p < ctx->prec; ++p) {
                SkewPoly basis = SkewPoly::from_coeffs(
                    ctx, RingTag::T, {{j, Series::x_power(field, p, ctx->prec)}});
                cols.push_back(Col{false, j, p, bt * basis});
            }
        }
    } catch (const error&) {
        return std::nullopt;
    }

    int elo = 0;
    int ehi = ctx->prec;
    int trows = 1;
    for (const Col& c : cols) {
        for (const auto& [e, s] : c.prod.coeffs()) {
            trows = std::max(trows, e + 1);
            elo = std::min(elo, s.eff_val());
            ehi = std::min(ehi, s.abs_prec());
        }
    }
    if (ehi <= elo || ehi < 1) return std::nullopt;

    LinearSystem sys;
    sys.a.assign(static_cast<std::size_t>(trows) * static_cast<std::size_t>(ehi - elo),
                 std::vector<FieldElem>(cols.size(), FieldElem::zero(field)));
    sys.rhs.assign(sys.a.size(), FieldElem::zero(field));
    auto row_of = [&](int theta, int e) {
        return static_cast<std::size_t>(theta) * static_cast<std::size_t>(ehi - elo) +
               static_cast<std::size_t>(e - elo);
    };
    sys.rhs[row_of(0, 0)] = FieldElem::one(field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& [e, s] : cols[c].prod.coeffs()) {
            for (int x = std::max(elo, s.eff_val()); x < std::min(ehi, s.abs_prec()); ++x) {
                sys.a[row_of(e, x)][c] = s.coeff(x);
            }
        }
    }
    auto sol = solve(sys, field);
    if (!sol) return std::nullopt;

    std::map<int, Series> um;
    std::map<int, Series> vm;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const FieldElem& coeff = (*sol)[c];
        if (coeff.is_zero()) continue;
        Series term = coeff * Series::x_power(field, cols[c].xpow, ctx->prec);
        auto& target = cols[c].u_side ? um : vm;
        auto it = target.find(cols[c].theta);
        if (it == target.end()) {
            target.emplace(cols[c].theta, std::move(term));
        } else {
            it->second = it->second + term;
        }
    }
    SkewPoly u = SkewPoly::from_coeffs(ctx, RingTag::T, std::move(um));
    SkewPoly v = SkewPoly::from_coeffs(ctx, RingTag::T, std::move(vm));
    SkewPoly diff =
        SkewPoly::scalar(ctx, RingTag::T, FieldElem::one(field)) - (u * at + bt * v);
    if (!diff.is_zero()) return std::nullopt;
    return ExtWitness{std::move(u), std::move(v), diff.effective_prec()};
}

}  // namespace

ExtSearchResult ext_vanishing_search(const SkewPoly& a, const SkewPoly& b,
                                     ExtSearchBounds bounds) {
    if (a.ctx() != b.ctx()) {
        throw usage_error("operands come from different ring contexts");
    }
    if (a.is_zero() || b.is_zero()) {
        throw usage_error("the Ext criterion needs nonzero elements");
    }
    ExtSearchBounds in_force = bounds;
    for (int vlo = bounds.min_val; vlo >= bounds.min_val_floor; --vlo) {
        for (int slack = std::max(bounds.slack, 1); slack <= bounds.max_slack; slack *= 2) {
            in_force = bounds;
            in_force.slack = slack;
            in_force.min_val = vlo;
            const int du = b.degree() + slack;
            const int dv = a.degree() + slack;
            if (auto w = ext_layered_attempt(a, b, du, dv, vlo)) {
                return ExtSearchResult{std::move(w), in_force};
            }
            if (auto w = ext_dense_attempt(a, b, du, dv, vlo)) {
                return ExtSearchResult{std::move(w), in_force};
            }
        }
    }
    return ExtSearchResult{std::nullopt, in_force};
}

}  // namespace skewseries
