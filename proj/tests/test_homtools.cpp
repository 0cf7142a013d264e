#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace skewseries;
using tu::ctx_q;
using tu::el;

TEST_CASE("verify_similarity: identity and associate witnesses") {
    auto ctx = ctx_q({2}, 8);
    SkewPoly a = el(ctx, "theta + X");
    SkewPoly one = el(ctx, "1");
    CHECK(verify_similarity(a, a, one) == SimilarityCheck::Verified);

    // Left multiplication by a unit series changes the generator, not the module.
    SkewPoly b = el(ctx, "(1 + X)*(theta + X)");
    CHECK(verify_similarity(a, b, one) == SimilarityCheck::Verified);
}

TEST_CASE("verify_similarity: each refutation clause fires") {
    auto ctx = ctx_q({2}, 8);
    SkewPoly th = el(ctx, "theta");
    SkewPoly th1 = el(ctx, "theta + 1");
    SkewPoly one = el(ctx, "1");
    CHECK(verify_similarity(th, el(ctx, "theta^2"), one) == SimilarityCheck::RefutedDegree);
    CHECK(verify_similarity(th, th, th) == SimilarityCheck::RefutedGcrdClause);
    CHECK(verify_similarity(th, th1, one) == SimilarityCheck::RefutedLclmClause);
    CHECK_THROWS_AS(verify_similarity(th, th1, SkewPoly::zero(ctx, RingTag::T)), usage_error);
}

TEST_CASE("search_similarity: fast path, self-similarity, and consistency") {
    auto ctx = ctx_q({2}, 8);
    SkewPoly a = el(ctx, "theta + X");
    SimilaritySearchResult mismatch = search_similarity(a, el(ctx, "theta^2 + X"), 3);
    CHECK(!mismatch.found());
    CHECK(mismatch.reason == "degree mismatch");

    SimilaritySearchResult self = search_similarity(a, a, 1);
    REQUIRE(self.found());
    CHECK(verify_similarity(a, a, self.witness->u) == SimilarityCheck::Verified);

    SkewPoly b = el(ctx, "(1 + X)*(theta + X)");
    SimilaritySearchResult assoc = search_similarity(a, b, 2);
    REQUIRE(assoc.found());
    CHECK(verify_similarity(a, b, assoc.witness->u) == SimilarityCheck::Verified);
}

TEST_CASE("search_similarity: theta and theta + 1 are not similar at q = 2") {
    // Every u with theta*u in T(theta+1) is a left multiple of theta + 1, so
    // the gcrd clause can never hold; the bounded search reports not found.
    auto ctx = ctx_q({2}, 8);
    SimilaritySearchResult r = search_similarity(el(ctx, "theta"), el(ctx, "theta + 1"), 3);
    CHECK(!r.found());
    CHECK(r.reason == "not found up to bound");
}

TEST_CASE("ext search solves the comaximal pair exactly") {
    auto ctx = ctx_q({2}, 16);
    ExtSearchResult r = ext_vanishing_search(el(ctx, "theta"), el(ctx, "theta + 1"));
    REQUIRE(r.found());
    CHECK(tu::matches(-r.witness->u.coeff(0), oracle::Vec{1}));
    CHECK(r.witness->u.degree() == 0);
    CHECK(tu::matches(r.witness->v.coeff(0), oracle::Vec{1}));
    CHECK(r.witness->v.degree() == 0);
    SkewPoly lhs = r.witness->u * el(ctx, "theta", RingTag::T) +
                   el(ctx, "theta + 1", RingTag::T) * r.witness->v;
    CHECK((lhs - el(ctx, "1", RingTag::T)).is_zero());
}

TEST_CASE("ext search exhausts its bounds on the self pair") {
    // u*theta + theta*v always has zero constant theta-coefficient, so no
    // bound ever produces a witness; the result records the final escalation.
    auto ctx = ctx_q({2}, 8);
    ExtSearchResult r = ext_vanishing_search(el(ctx, "theta"), el(ctx, "theta"));
    CHECK(!r.found());
    CHECK(r.bounds.slack == 8);
    CHECK(r.bounds.min_val == -2);
}

TEST_CASE("ext witnesses re-verify by multiplication") {
    auto ctx = ctx_q({2}, 12);
    SkewPoly a = el(ctx, "theta + 1");
    SkewPoly b = el(ctx, "1 + X*theta");
    ExtSearchResult r = ext_vanishing_search(a, b);
    REQUIRE(r.found());
    SkewPoly lhs = r.witness->u * a.with_tag(RingTag::T) +
                   b.with_tag(RingTag::T) * r.witness->v;
    CHECK(eq_mod(lhs, el(ctx, "1", RingTag::T), r.witness->prec));
    CHECK(r.witness->prec >= 1);
}

TEST_CASE("random type pairs: every returned ext witness re-verifies") {
    auto ctx = ctx_q({2}, 12);
    Sampler sampler(ctx, 11);
    SkewPoly one = el(ctx, "1", RingTag::T);
    int found = 0;
    for (int trial = 0; trial < 10; ++trial) {
        SkewPoly c = sampler.type_c(sampler.uniform_int(1, 2));
        SkewPoly b = sampler.type_b(sampler.uniform_int(1, 2));
        ExtSearchResult r = ext_vanishing_search(c, b);
        if (!r.found()) continue;
        ++found;
        SkewPoly lhs = r.witness->u * c.with_tag(RingTag::T) +
                       b.with_tag(RingTag::T) * r.witness->v;
        CHECK(eq_mod(lhs, one, r.witness->prec));
    }
    CHECK(found >= 5);
}
