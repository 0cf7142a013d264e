#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace skewseries;
using tu::ctx_q;
using tu::el;

TEST_CASE("theta moves past coefficients through alpha") {
    auto ctx = ctx_q({2}, 8);
    SkewPoly tx = el(ctx, "theta*X");
    CHECK(tx.degree() == 1);
    CHECK(tu::matches(tx.coeff(1), oracle::Vec{0, 2}));  // 2X theta
    SkewPoly xt = el(ctx, "X*theta");
    CHECK(tu::matches(xt.coeff(1), oracle::Vec{0, 1}));
    CHECK(!eq_at_shared_prec(tx, xt));

    // theta^i * r = alpha^i(r) * theta^i
    Series r = tu::ser(ctx, {1, 3, -2});
    SkewPoly lhs = SkewPoly::theta(ctx, RingTag::S, 3) * SkewPoly::constant(ctx, RingTag::S, r);
    SkewPoly rhs = SkewPoly::constant(ctx, RingTag::S, ctx->alpha.apply(r, 3)) *
                   SkewPoly::theta(ctx, RingTag::S, 3);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("worked products in both the commutative and twisted settings") {
    auto c1 = ctx_q({1}, 8);
    SkewPoly p1 = el(c1, "(theta+1)*(X*theta+1)");
    CHECK(eq_at_shared_prec(p1, el(c1, "X*theta^2 + (1+X)*theta + 1")));

    auto c2 = ctx_q({2}, 8);
    SkewPoly p2 = el(c2, "(theta+1)*(1+X*theta)");
    CHECK(tu::matches(p2.coeff(0), oracle::Vec{1}));
    CHECK(tu::matches(p2.coeff(1), oracle::Vec{1, 1}));
    CHECK(tu::matches(p2.coeff(2), oracle::Vec{0, 2}));
    CHECK(p2.degree() == 2);
}

TEST_CASE("X is normal: zX = X * twisted(z)") {
    auto ctx = ctx_q({2}, 12);
    Sampler sampler(ctx, 7);
    for (int trial = 0; trial < 20; ++trial) {
        SkewPoly z = sampler.skew(RingTag::S, 4);
        SkewPoly zx = z * SkewPoly::x(ctx, RingTag::S);
        std::map<int, Series> twisted;
        for (const auto& [i, c] : z.coeffs()) twisted.emplace(i, c * ctx->alpha.norm(i));
        SkewPoly xz = SkewPoly::x(ctx, RingTag::S) *
                      SkewPoly::from_coeffs(ctx, RingTag::S, std::move(twisted));
        CHECK((zx - xz).is_zero());
    }
}

TEST_CASE("degree additivity in T") {
    auto ctx = ctx_q({2}, 8);
    Sampler sampler(ctx, 11);
    for (int trial = 0; trial < 20; ++trial) {
        SkewPoly a = sampler.nonzero_skew(RingTag::T, 3, -1, 2);
        SkewPoly b = sampler.nonzero_skew(RingTag::T, 3, -1, 2);
        SkewPoly p = a * b;
        REQUIRE(!p.is_zero());
        CHECK(p.degree() == a.degree() + b.degree());
    }
}

TEST_CASE("trivial divisions") {
    auto ctx = ctx_q({2}, 8);
    SkewPoly z = el(ctx, "1 + (2 + X)*theta + (1 + X)*theta^3");
    for (auto side : {DivisionResult::Side::Right, DivisionResult::Side::Left}) {
        DivisionResult r = side == DivisionResult::Side::Right
                               ? right_divmod(z, z)
                               : left_divmod(z, z);
        CHECK(r.remainder.is_zero());
        CHECK(eq_mod(r.quotient, SkewPoly::scalar(ctx, RingTag::S, FieldElem::one(ctx->field)),
                     r.prec));
    }
    DivisionResult t = right_divmod(SkewPoly::theta(ctx, RingTag::S, 2),
                                    SkewPoly::theta(ctx, RingTag::S));
    CHECK(t.remainder.is_zero());
    CHECK(eq_at_shared_prec(t.quotient, SkewPoly::theta(ctx, RingTag::S)));
}

TEST_CASE("the worked right and left divisions at q = 2") {
    auto ctx = ctx_q({2}, 4);
    SkewPoly z = el(ctx, "2*X*theta^2 + (1 + X)*theta + 1");
    SkewPoly d = el(ctx, "theta + 1 + X + 5*X^2 + 49*X^3");
    DivisionResult r = right_divmod(z, d);
    CHECK(r.remainder.is_zero());
    CHECK(r.prec == 4);
    CHECK(tu::matches(r.quotient.coeff(0), oracle::Vec{1, -1, -4, -40}));
    CHECK(tu::matches(r.quotient.coeff(1), oracle::Vec{0, 2}));

    // The opposite side divides by a leading coefficient of valuation 1, in T;
    // the two elimination steps each cost one X-degree, so the quotient is the
    // same witness truncated to the honestly attainable precision.
    SkewPoly d2 = el(ctx, "1 - X - 4*X^2 - 40*X^3 + 2*X*theta", RingTag::T);
    DivisionResult l = left_divmod(z.with_tag(RingTag::T), d2);
    CHECK(l.remainder.is_zero());
    CHECK(l.prec == 2);
    SkewPoly expected = el(ctx, "theta + 1 + X + 5*X^2 + 49*X^3", RingTag::T);
    CHECK(eq_mod(l.quotient, expected, l.prec));
    // The full-precision content of the example: the witness re-multiplies.
    CHECK((d2 * expected - z.with_tag(RingTag::T)).is_zero());
}

TEST_CASE("division round trips on random pairs, both sides") {
    auto ctx = ctx_q({2}, 10);
    Sampler sampler(ctx, 23);
    for (int trial = 0; trial < 25; ++trial) {
        SkewPoly z = sampler.nonzero_skew(RingTag::T, 4, -1, 2);
        SkewPoly d = sampler.nonzero_skew(RingTag::T, 2, -1, 1);
        DivisionResult r = right_divmod(z, d);
        CHECK(eq_mod(z, r.quotient * d + r.remainder, r.prec));
        if (!r.remainder.is_zero()) CHECK(r.remainder.degree() < d.degree());
        DivisionResult l = left_divmod(z, d);
        CHECK(eq_mod(z, d * l.quotient + l.remainder, l.prec));
        if (!l.remainder.is_zero()) CHECK(l.remainder.degree() < d.degree());
    }
}

TEST_CASE("S-division demands a unit leading coefficient") {
    auto ctx = ctx_q({2}, 8);
    SkewPoly z = el(ctx, "theta^2 + 1");
    SkewPoly bad = el(ctx, "X*theta + 1");
    CHECK_THROWS_AS(right_divmod(z, bad), not_a_unit);
    CHECK_THROWS_AS(left_divmod(z, bad), not_a_unit);
    // The same divisor is fine in T.
    DivisionResult r = right_divmod(z.with_tag(RingTag::T), bad.with_tag(RingTag::T));
    CHECK(eq_mod(z.with_tag(RingTag::T), r.quotient * bad.with_tag(RingTag::T) + r.remainder,
                 r.prec));
    CHECK(r.prec < ctx->prec);  // dividing by valuation-1 lead costs precision
    CHECK_THROWS_AS(right_divmod(z, SkewPoly::zero(ctx, RingTag::S)), usage_error);
}

TEST_CASE("lifting T-elements into S") {
    auto ctx = ctx_q({2}, 8);
    auto [z1, n1] = lift_to_S(SkewPoly::x(ctx, RingTag::T, -1) *
                              el(ctx, "theta", RingTag::T));
    CHECK(n1 == 1);
    CHECK(eq_at_shared_prec(z1, el(ctx, "theta").with_tag(RingTag::S)));

    auto [z2, n2] = lift_to_S(el(ctx, "theta + 1", RingTag::T));
    CHECK(n2 == 0);
    CHECK(eq_at_shared_prec(z2, el(ctx, "theta + 1")));

    SkewPoly t = SkewPoly::x(ctx, RingTag::T, -2) * el(ctx, "theta", RingTag::T) +
                 SkewPoly::x(ctx, RingTag::T, -1);
    auto [z3, n3] = lift_to_S(t);
    CHECK(n3 == 2);
    CHECK(eq_at_shared_prec(z3, el(ctx, "theta + X")));
}

TEST_CASE("ring tags police valuations") {
    auto ctx = ctx_q({2}, 8, 4);  // vmax = 4
    SkewPoly xm1 = SkewPoly::x(ctx, RingTag::T, -1);
    CHECK_THROWS_AS(xm1.with_tag(RingTag::S), usage_error);
    CHECK_THROWS_AS(SkewPoly::x(ctx, RingTag::T, -5), valuation_error);
    CHECK_THROWS_AS(SkewPoly::x(ctx, RingTag::S, -1), usage_error);
}

TEST_CASE("zero-at-reduced-precision coefficients bound effective precision") {
    auto ctx = ctx_q({2}, 8);
    std::map<int, Series> coeffs;
    coeffs.emplace(0, Series::one(ctx->field, 8));
    coeffs.emplace(2, Series(ctx->field, 3));  // zero, but only known mod X^3
    SkewPoly z = SkewPoly::from_coeffs(ctx, RingTag::S, std::move(coeffs));
    CHECK(z.effective_prec() == 3);
    CHECK(z.degree() == 0);  // the zero entry holds no nonzero coefficient
    CHECK(!z.is_zero());
    // A fully known zero entry is dropped instead.
    std::map<int, Series> coeffs2;
    coeffs2.emplace(0, Series::one(ctx->field, 8));
    coeffs2.emplace(2, Series(ctx->field, 8));
    SkewPoly w = SkewPoly::from_coeffs(ctx, RingTag::S, std::move(coeffs2));
    CHECK(w.effective_prec() == 8);
    CHECK(w.coeffs().size() == 1);
}
