#include <doctest.h>

#include "skewseries/linsolve.hpp"
#include "test_util.hpp"

using namespace skewseries;

namespace {

LinearSystem make_system(Field f, const std::vector<std::vector<long>>& a,
                         const std::vector<long>& rhs) {
    LinearSystem sys;
    for (const auto& row : a) {
        std::vector<FieldElem> r;
        for (long x : row) r.emplace_back(f, x);
        sys.a.push_back(std::move(r));
    }
    for (long x : rhs) sys.rhs.emplace_back(f, x);
    return sys;
}

bool check_solution(const LinearSystem& sys, const std::vector<FieldElem>& x, Field f) {
    for (std::size_t i = 0; i < sys.a.size(); ++i) {
        FieldElem acc = FieldElem::zero(f);
        for (std::size_t j = 0; j < x.size(); ++j) acc = acc + sys.a[i][j] * x[j];
        if (acc != sys.rhs[i]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("unique solution over Q") {
    Field f = Field::rationals();
    LinearSystem sys = make_system(f, {{2, 1}, {1, -1}}, {5, 1});
    auto x = solve(sys, f);
    REQUIRE(x.has_value());
    CHECK((*x)[0].rational() == 2);
    CHECK((*x)[1].rational() == 1);
}

TEST_CASE("inconsistent system returns nullopt") {
    Field f = Field::rationals();
    LinearSystem sys = make_system(f, {{1, 1}, {2, 2}}, {1, 3});
    CHECK(!solve(sys, f).has_value());
}

TEST_CASE("free variables take the filler") {
    Field f = Field::rationals();
    LinearSystem sys = make_system(f, {{1, 1}}, {3});
    auto zero_fill = solve(sys, f);
    REQUIRE(zero_fill.has_value());
    CHECK(check_solution(sys, *zero_fill, f));
    CHECK((*zero_fill)[1].is_zero());

    auto two_fill = solve(sys, f, FieldElem(f, 2));
    REQUIRE(two_fill.has_value());
    CHECK(check_solution(sys, *two_fill, f));
    CHECK((*two_fill)[1].rational() == 2);
}

TEST_CASE("prime field elimination needs modular inverses") {
    Field f = Field::prime(5);
    // Pivot 2 requires 2^{-1} = 3 mod 5.
    LinearSystem sys = make_system(f, {{2, 0}, {3, 1}}, {3, 2});
    auto x = solve(sys, f);
    REQUIRE(x.has_value());
    CHECK(check_solution(sys, *x, f));
    CHECK((*x)[0].residue() == 4);  // 2*4 = 8 = 3 mod 5
}

TEST_CASE("kernel basis spans the null space") {
    Field f = Field::rationals();
    std::vector<std::vector<FieldElem>> a = make_system(f, {{1, 2, 3}}, {0}).a;
    auto basis = kernel_basis(a, f);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        FieldElem acc = FieldElem::zero(f);
        for (std::size_t j = 0; j < v.size(); ++j) acc = acc + a[0][j] * v[j];
        CHECK(acc.is_zero());
    }

    std::vector<std::vector<FieldElem>> full = make_system(f, {{1, 0}, {0, 1}}, {0, 0}).a;
    CHECK(kernel_basis(full, f).empty());

    std::vector<std::vector<FieldElem>> zero = make_system(f, {{0, 0}}, {0}).a;
    CHECK(kernel_basis(zero, f).size() == 2);
}

TEST_CASE("wide and tall systems") {
    Field f = Field::rationals();
    LinearSystem tall = make_system(f, {{1, 0}, {0, 1}, {1, 1}}, {2, 3, 5});
    auto x = solve(tall, f);
    REQUIRE(x.has_value());
    CHECK(check_solution(tall, *x, f));

    LinearSystem tall_bad = make_system(f, {{1, 0}, {0, 1}, {1, 1}}, {2, 3, 6});
    CHECK(!solve(tall_bad, f).has_value());
}
