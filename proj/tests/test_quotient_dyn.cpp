#include "doctest.h"

#include <algorithm>

#include "avdyn/errors.hpp"
#include "avdyn/quotient_dyn.hpp"
#include "oracles.hpp"

using namespace avdyn;

namespace {

RationalVector half_first() { return RationalVector{Rational(1, 2), 0, 0, 0}; }

GroupAction trivial(std::size_t n) { return GroupAction{{AffineAutomorphism(IntegerMatrix::identity(n), RationalVector(n))}}; }

GroupAction bielliptic()
{
    GroupAction a = trivial(4);
    a.elements.emplace_back(IntegerMatrix::diagonal({1, 1, -1, -1}), half_first());
    return a;
}

} // namespace

TEST_CASE("affine automorphisms")
{
    CHECK_THROWS_AS(AffineAutomorphism(IntegerMatrix::scalar(2, 2), RationalVector(2)), ValidationError);
    const AffineAutomorphism g(IntegerMatrix::diagonal({1, 1, -1, -1}), half_first());
    CHECK(compose(g, g).is_identity());
    CHECK(g.apply(TorsionPoint(RationalVector{0, 0, Rational(1, 3), 0})) ==
          TorsionPoint(RationalVector{Rational(1, 2), 0, Rational(2, 3), 0}));
}

TEST_CASE("has_fixed_point: decided by congruence solvability")
{
    CHECK_FALSE(has_fixed_point(AffineAutomorphism(IntegerMatrix::diagonal({1, 1, -1, -1}), half_first())));
    CHECK(has_fixed_point(AffineAutomorphism(IntegerMatrix::diagonal({1, 1, -1, -1}), RationalVector(4))));
    // -1 with a half-period shift still has fixed points (2x = -s is solvable)
    CHECK(has_fixed_point(AffineAutomorphism(IntegerMatrix::scalar(4, -1), half_first())));
    // pure translation by a nonzero vector has none
    CHECK_FALSE(has_fixed_point(AffineAutomorphism(IntegerMatrix::identity(2), RationalVector{0, Rational(1, 3)})));
}

TEST_CASE("validate_action: documented examples")
{
    CHECK(validate_action(trivial(2)).valid());

    const auto v = validate_action(bielliptic());
    CHECK(v.valid());
    CHECK(v.free);
    CHECK(v.closed);

    GroupAction linear = trivial(4);
    linear.elements.emplace_back(IntegerMatrix::diagonal({1, 1, -1, -1}), RationalVector(4));
    const auto w = validate_action(linear);
    CHECK(w.closed);
    CHECK(w.has_inverses);
    CHECK_FALSE(w.free);
    CHECK_FALSE(w.valid());
}

TEST_CASE("validate_action: each broken axiom is named")
{
    GroupAction no_id{{AffineAutomorphism(IntegerMatrix::diagonal({1, 1, -1, -1}), half_first())}};
    auto v = validate_action(no_id);
    CHECK_FALSE(v.has_identity);
    CHECK_FALSE(v.closed);

    GroupAction open = trivial(2);
    open.elements.emplace_back(IntegerMatrix::identity(2), RationalVector{Rational(1, 3), 0});
    v = validate_action(open);
    CHECK(v.has_identity);
    CHECK_FALSE(v.closed);
    CHECK_FALSE(v.has_inverses);
    CHECK(std::any_of(v.violations.begin(), v.violations.end(),
                      [](const std::string& s) { return s.rfind("closure", 0) == 0; }));

    CHECK_FALSE(validate_action(GroupAction{}).valid());
}

TEST_CASE("validate_action: independent of element order and idempotent")
{
    GroupAction a = trivial(2);
    for (int k = 1; k < 3; ++k)
        a.elements.emplace_back(IntegerMatrix::identity(2), RationalVector{Rational(k, 3), 0});
    const auto base = validate_action(a);
    CHECK(base.valid());
    std::reverse(a.elements.begin(), a.elements.end());
    const auto reversed = validate_action(a);
    CHECK(reversed.valid() == base.valid());
    CHECK(reversed.free == base.free);
    CHECK(validate_action(a).violations == reversed.violations);
}

TEST_CASE("lift_compatibility: documented examples")
{
    const auto three = LatticeEndomorphism::multiplication(4, 3);
    const auto c = lift_compatibility(three, bielliptic());
    CHECK(c.compatible);
    CHECK(c.permutation == std::vector<std::size_t>{0, 1});

    const auto two = LatticeEndomorphism::multiplication(4, 2);
    const auto d = lift_compatibility(two, bielliptic());
    CHECK_FALSE(d.compatible);
    CHECK_FALSE(d.failure.empty());

    CHECK(lift_compatibility(LatticeEndomorphism(IntegerMatrix{{1, -1}, {1, 1}}), trivial(2)).compatible);
}

TEST_CASE("lift_compatibility is inherited by powers")
{
    const auto three = LatticeEndomorphism::multiplication(4, 3);
    const auto five = LatticeEndomorphism::multiplication(4, 5);
    for (const auto& f : {three, five}) {
        REQUIRE(lift_compatibility(f, bielliptic()).compatible);
        for (unsigned long l = 1; l <= 4; ++l)
            CHECK(lift_compatibility(power(f, l), bielliptic()).compatible);
    }
}

TEST_CASE("quotient_fixed_lower_bound: bielliptic action with [3]")
{
    const auto three = LatticeEndomorphism::multiplication(4, 3);
    const auto b1 = quotient_fixed_lower_bound(three, bielliptic(), 9, 1);
    CHECK(b1.upstairs_count == 16);
    CHECK(b1.orbit_count == 8);
    CHECK(b1.bound == Rational(8));
    CHECK(b1.bound_holds);
    // the bound evaluated with the multiplier q = 9 exceeds the orbit count
    CHECK(b1.literal_bound == Rational(32));
    CHECK_FALSE(b1.literal_bound_holds);

    const auto b2 = quotient_fixed_lower_bound(three, bielliptic(), 9, 2);
    CHECK(b2.upstairs_count == 4096);
    CHECK(b2.orbit_count == 2048);
    CHECK(b2.bound_holds);
    CHECK(Rational(b2.orbit_count * 2) >= Rational(b2.upstairs_count));
}

TEST_CASE("quotient_fixed_lower_bound: trivial group counts every fixed point")
{
    const LatticeEndomorphism f(IntegerMatrix{{1, -1}, {1, 1}});
    for (unsigned long l = 1; l <= 4; ++l) {
        const auto b = quotient_fixed_lower_bound(f, trivial(2), 2, l);
        CHECK(b.orbit_count == count_fixed(f, l));
    }
}

TEST_CASE("quotient_fixed_lower_bound: rejects non-free actions and non-descending maps")
{
    GroupAction linear = trivial(4);
    linear.elements.emplace_back(IntegerMatrix::diagonal({1, 1, -1, -1}), RationalVector(4));
    CHECK_THROWS_AS(quotient_fixed_lower_bound(LatticeEndomorphism::multiplication(4, 3), linear, 9, 1),
                    ValidationError);
    CHECK_THROWS_AS(quotient_fixed_lower_bound(LatticeEndomorphism::multiplication(4, 2), bielliptic(), 4, 1),
                    ValidationError);
}
