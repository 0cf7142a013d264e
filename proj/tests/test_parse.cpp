#include <doctest.h>

#include "test_util.hpp"

using namespace skewseries;
using tu::ctx_q;
using tu::el;

TEST_CASE("print and reparse is the identity on S") {
    auto ctx = ctx_q({2}, 8);
    const char* sources[] = {
        "1",
        "X",
        "theta",
        "1 + 2*X - X^3",
        "1/2 + (3/4)*X*theta",
        "(1 + X)*theta^2 + X^5",
        "theta^3 - theta + 7",
        "(1 + X + X^2)*(theta + 1)*(theta - 1)",
    };
    for (const char* src : sources) {
        SkewPoly z = el(ctx, src);
        SkewPoly again = el(ctx, print_element(z));
        CHECK(eq_at_shared_prec(z, again));
    }
}

TEST_CASE("the UTF-8 theta alias parses identically") {
    auto ctx = ctx_q({2}, 8);
    CHECK(eq_at_shared_prec(el(ctx, "θ^2 + X*θ"), el(ctx, "theta^2 + X*theta")));
}

TEST_CASE("products evaluate in ring order") {
    auto ctx = ctx_q({2}, 8);
    CHECK(eq_at_shared_prec(el(ctx, "(1 + X)*(1 - X)"), el(ctx, "1 - X^2")));
    // theta*X = alpha(X)*theta = 2*X*theta at q = 2.
    SkewPoly tx = el(ctx, "theta*X");
    CHECK(tu::matches(tx.coeff(1), oracle::Vec{0, 2}));
    CHECK(tx.coeff(0).is_zero());
    SkewPoly xt = el(ctx, "X*theta");
    CHECK(tu::matches(xt.coeff(1), oracle::Vec{0, 1}));
}

TEST_CASE("rational scalars and negative leading sign") {
    auto ctx = ctx_q({2}, 8);
    SkewPoly z = el(ctx, "-1/2 + 5*X");
    CHECK(tu::matches(-z.coeff(0), oracle::Vec{oracle::Rat(1) / 2, -5}));
}

TEST_CASE("parse errors carry positions") {
    auto ctx = ctx_q({2}, 8);
    auto pos_of = [&](const std::string& src) -> std::size_t {
        try {
            el(ctx, src);
        } catch (const parse_error& e) {
            return e.pos;
        }
        return std::string::npos;
    };
    CHECK(pos_of("1 + ") == 4);           // unexpected end of input
    CHECK(pos_of("(1 + X") == 6);         // missing ')'
    CHECK(pos_of("1 + %") == 4);          // unknown atom
    CHECK(pos_of("X^") == 2);             // exponent digits missing
    CHECK(pos_of("1/0") == 0);            // zero denominator, anchored at the literal
    CHECK(pos_of("1 + X) + 2") == 5);     // trailing input
    CHECK_THROWS_AS(el(ctx, "X^513"), parse_error);
    CHECK_NOTHROW(el(ctx, "X^512"));
    CHECK_THROWS_AS(el(ctx, ""), parse_error);
}

TEST_CASE("parse_series rejects theta and feeds plain windows") {
    Field f = Field::rationals();
    Series s = parse_series("1 - X + 2*X^2", f, 8);
    CHECK(tu::matches(s, oracle::Vec{1, -1, 2}));
    CHECK(s.abs_prec() == 8);
    CHECK_THROWS_AS(parse_series("theta + 1", f, 8), parse_error);
}

TEST_CASE("exponents past the precision window degenerate to zero") {
    auto ctx = ctx_q({2}, 4);
    SkewPoly z = el(ctx, "1 + X^7");
    CHECK(eq_at_shared_prec(z, el(ctx, "1")));
}

TEST_CASE("printing T elements with negative valuations is display-only") {
    auto ctx = ctx_q({2}, 6);
    SkewPoly z = el(ctx, "theta + X", RingTag::T);
    DivisionResult d = left_divmod(z, el(ctx, "X", RingTag::T));
    std::string text = print_element(d.quotient);
    CHECK(text.find("X^-1") != std::string::npos);
}
