#include "doctest.h"

#include "avdyn/errors.hpp"
#include "avdyn/intersect_sym.hpp"
#include "oracles.hpp"

using namespace avdyn;

TEST_CASE("expand_sum_power: documented examples")
{
    CHECK(expand_sum_power(2, 1) == 2);
    CHECK(expand_sum_power(3, 1) == 6);
    CHECK(expand_sum_power(2, 2) == 6);
}

TEST_CASE("expand_sum_power: multinomial identity across the size cap")
{
    for (std::size_t r = 1; r <= 16; ++r)
        for (std::size_t n = 1; r * n <= kMaxExpansionDegree; ++n)
            CHECK(expand_sum_power(r, n) == oracle::multinomial_equal_parts(r, n));
    for (std::size_t r = 1; r <= 8; ++r)
        CHECK(expand_sum_power(r, 1) == oracle::factorial(r));
}

TEST_CASE("expand_sum_power: size cap and arguments")
{
    CHECK_THROWS_AS(expand_sum_power(3, 6), ValidationError);
    CHECK_THROWS_AS(expand_sum_power(0, 1), ValidationError);
    CHECK_THROWS_AS(expand_sum_power(1, 0), ValidationError);
}

TEST_CASE("expand_monomials: annihilation drops high powers")
{
    // (F1 + F2)^2 with n = 1: only F1 F2 survives, coefficient 2
    const auto m = expand_monomials(2, 1, 2);
    REQUIRE(m.size() == 1);
    CHECK(m[0].exponents == std::vector<std::size_t>{1, 1});
    CHECK(m[0].coefficient == 2);
    // past the top degree everything vanishes
    CHECK(expand_monomials(2, 1, 3).empty());
}

TEST_CASE("proddiv_comparison: literal reading agrees only for n = 1 or r = 1")
{
    CHECK(proddiv_comparison(3, 1).agree);
    CHECK(proddiv_comparison(1, 4).agree);
    const auto c = proddiv_comparison(2, 2);
    CHECK(c.expansion == 6);
    CHECK(c.literal == 4);
    CHECK_FALSE(c.agree);
}

TEST_CASE("pullback_degree_check: documented examples")
{
    const auto S = IntegerMatrix::standard_symplectic(1);
    auto id = pullback_degree_check(IntegerMatrix::identity(2), S);
    CHECK(id.equal);
    CHECK(id.lhs == pfaffian(S));

    const auto two = pullback_degree_check(IntegerMatrix::scalar(2, 2), S);
    CHECK(two.lhs == 4);
    CHECK(two.rhs == 4);
    CHECK(two.equal);

    std::mt19937_64 rng(59);
    const auto S2 = IntegerMatrix::standard_symplectic(2);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(pullback_degree_check(oracle::random_matrix(rng, 4, 4, -5, 5), S2).equal);
}

TEST_CASE("pullback_degree_check: malformed forms")
{
    CHECK_THROWS_AS(pullback_degree_check(IntegerMatrix::identity(2), IntegerMatrix::identity(2)), ValidationError);
    CHECK_THROWS_AS(pullback_degree_check(IntegerMatrix::identity(2), IntegerMatrix(2, 2)), ValidationError);
    CHECK_THROWS_AS(pullback_degree_check(IntegerMatrix::identity(4), IntegerMatrix::standard_symplectic(1)),
                    ValidationError);
}
