#include "doctest.h"

#include "avdyn/errors.hpp"
#include "avdyn/lattice_av.hpp"
#include "oracles.hpp"

using namespace avdyn;

namespace {

const IntegerMatrix kGaussian{{1, -1}, {1, 1}};
const IntegerMatrix kSumDifference{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}};

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

} // namespace

TEST_CASE("torus: standard tori validate, malformed structures are rejected")
{
    CHECK_NOTHROW(ComplexTorus::standard(1));
    CHECK_NOTHROW(ComplexTorus::standard(3));
    CHECK_THROWS_AS(ComplexTorus(0), ValidationError);

    // J^2 != -I
    CHECK_THROWS_AS(ComplexTorus(1, RationalMatrix::identity(2)), ValidationError);
    // S symmetric
    CHECK_THROWS_AS(ComplexTorus(1, std::nullopt, IntegerMatrix{{0, 1}, {1, 0}}), ValidationError);
    // S degenerate
    CHECK_THROWS_AS(ComplexTorus(1, std::nullopt, IntegerMatrix(2, 2)), ValidationError);
    // wrong size
    CHECK_THROWS_AS(ComplexTorus(2, std::nullopt, IntegerMatrix::standard_symplectic(1)), ValidationError);
    // opposite complex structure makes J^t S negative definite
    RationalMatrix J_bar(IntegerMatrix{{0, -1}, {1, 0}});
    CHECK_THROWS_AS(ComplexTorus(1, J_bar, IntegerMatrix::standard_symplectic(1)), ValidationError);
    CHECK_NOTHROW(ComplexTorus(1, J_bar, IntegerMatrix{{0, -1}, {1, 0}}));
    // J swapping the factors does not preserve a form weighting them differently
    RationalMatrix J4(IntegerMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
    CHECK_THROWS_AS(ComplexTorus(2, J4, IntegerMatrix::block_diagonal({IntegerMatrix::standard_symplectic(1),
                                                                       IntegerMatrix::standard_symplectic(1) * Integer(2)})),
                    ValidationError);
}

TEST_CASE("endomorphism: translations are reduced to [0,1)")
{
    LatticeEndomorphism f(IntegerMatrix::identity(2), rv({Rational(-1, 2), Rational(7, 3)}));
    CHECK(f.translation() == rv({Rational(1, 2), Rational(1, 3)}));
    CHECK_THROWS_AS(LatticeEndomorphism(IntegerMatrix::identity(3)), ValidationError);
    CHECK_THROWS_AS(LatticeEndomorphism(IntegerMatrix::identity(2), rv({0})), ValidationError);
}

TEST_CASE("compose: documented examples")
{
    const auto two = LatticeEndomorphism::multiplication(2, 2);
    const auto three = LatticeEndomorphism::multiplication(2, 3);
    CHECK(compose(LatticeEndomorphism::identity(2), two) == two);
    CHECK(compose(two, three) == LatticeEndomorphism::multiplication(2, 6));

    const LatticeEndomorphism f(kGaussian, rv({Rational(1, 2), 0}));
    const auto fh = compose(f, two);
    CHECK(fh.matrix() == kGaussian * Integer(2));
    CHECK(fh.translation() == rv({Rational(1, 2), 0}));

    CHECK_THROWS_AS(compose(two, LatticeEndomorphism::identity(4)), ValidationError);
}

TEST_CASE("power: documented examples")
{
    const LatticeEndomorphism f(kGaussian, rv({Rational(1, 3), 0}));
    CHECK(power(f, 1) == f);
    CHECK(power(LatticeEndomorphism::multiplication(2, 2), 3) == LatticeEndomorphism::multiplication(2, 8));
    const LatticeEndomorphism g(IntegerMatrix::scalar(2, 2), rv({Rational(1, 2), 0}));
    const auto g2 = power(g, 2);
    CHECK(g2.matrix() == IntegerMatrix::scalar(2, 4));
    CHECK(g2.translation() == rv({Rational(1, 2), 0}));
    CHECK_THROWS_AS(power(f, 0), ValidationError);
}

TEST_CASE("power: matches repeated composition")
{
    const LatticeEndomorphism f(kSumDifference, rv({Rational(1, 3), Rational(2, 5), 0, Rational(1, 7)}));
    LatticeEndomorphism acc = f;
    for (unsigned long l = 2; l <= 6; ++l) {
        acc = compose(f, acc);
        CHECK(power(f, l) == acc);
    }
}

TEST_CASE("degree: documented examples")
{
    CHECK(degree(LatticeEndomorphism(IntegerMatrix::diagonal({1, 1, 1, 1, 4, 4}))) == 16);
    CHECK(degree(LatticeEndomorphism(kSumDifference)) == 4);
    for (long m = 2; m <= 4; ++m)
        for (std::size_t g = 1; g <= 3; ++g)
            CHECK(degree(LatticeEndomorphism::multiplication(2 * g, m)) == oracle::ipow(m, 2 * g));
    CHECK(degree(LatticeEndomorphism(IntegerMatrix{{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("degree: multiplicative under composition and powers")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = LatticeEndomorphism(oracle::random_matrix(rng, 4, 4, -3, 3));
        const auto h = LatticeEndomorphism(oracle::random_matrix(rng, 4, 4, -3, 3));
        CHECK(degree(compose(f, h)) == degree(f) * degree(h));
        const unsigned long l = 1 + trial % 4;
        CHECK(degree(power(f, l)) == oracle::ipow(degree(f), l));
    }
}

TEST_CASE("complementary_isogeny: documented examples")
{
    auto c = complementary_isogeny(LatticeEndomorphism::multiplication(2, 2));
    CHECK(c.m == 2);
    CHECK(c.dual.matrix() == IntegerMatrix::identity(2));

    c = complementary_isogeny(LatticeEndomorphism(kGaussian));
    CHECK(c.m == 2);
    CHECK(c.dual.matrix() == IntegerMatrix{{1, 1}, {-1, 1}});
    CHECK(c.dual.matrix() * kGaussian == IntegerMatrix::scalar(2, 2));

    c = complementary_isogeny(LatticeEndomorphism(IntegerMatrix::diagonal({1, 6})));
    CHECK(c.m == 6);
    CHECK(c.dual.matrix() == IntegerMatrix::diagonal({6, 1}));
}

TEST_CASE("complementary_isogeny: error contract")
{
    CHECK_THROWS_AS(complementary_isogeny(LatticeEndomorphism(IntegerMatrix{{1, 2}, {2, 4}})), DegenerateError);
    CHECK_THROWS_AS(complementary_isogeny(LatticeEndomorphism(IntegerMatrix::identity(2), rv({Rational(1, 2), 0}))),
                    ValidationError);
}

TEST_CASE("complementary_isogeny: m^{2g} = deg f * deg dual on random isogenies")
{
    std::mt19937_64 rng(41);
    int tested = 0;
    while (tested < 40) {
        const std::size_t n = tested % 2 ? 4 : 2;
        const LatticeEndomorphism f(oracle::random_matrix(rng, n, n, -4, 4));
        if (degree(f) == 0)
            continue;
        const auto c = complementary_isogeny(f);
        CHECK(c.dual.matrix() * f.matrix() == IntegerMatrix::scalar(n, c.m));
        CHECK(f.matrix() * c.dual.matrix() == IntegerMatrix::scalar(n, c.m));
        CHECK(oracle::ipow(c.m, n) == degree(f) * degree(c.dual));
        ++tested;
    }
}

TEST_CASE("polarization_multiplier: documented examples")
{
    const auto E = ComplexTorus::standard(1);
    for (long m = 2; m <= 5; ++m)
        CHECK(polarization_multiplier(LatticeEndomorphism::multiplication(2, m), E) == Integer(m * m));
    // any valid form: [m]^t S [m] = m^2 S regardless of S
    const ComplexTorus odd(2, std::nullopt, IntegerMatrix{{0, 3, 1, 0}, {-3, 0, 2, 5}, {-1, -2, 0, 1}, {0, -5, -1, 0}});
    CHECK(polarization_multiplier(LatticeEndomorphism::multiplication(4, 3), odd) == Integer(9));

    const auto ExE = ComplexTorus::standard(2);
    CHECK(polarization_multiplier(LatticeEndomorphism(kSumDifference), ExE) == Integer(2));
    CHECK(polarization_multiplier(LatticeEndomorphism(kGaussian), E) == Integer(2));

    const auto AxE = ComplexTorus::standard(3);
    CHECK_FALSE(polarization_multiplier(LatticeEndomorphism(IntegerMatrix::diagonal({1, 1, 1, 1, 4, 4})), AxE));

    CHECK_THROWS_AS(polarization_multiplier(LatticeEndomorphism(kGaussian), ComplexTorus(1)), ValidationError);
}

TEST_CASE("polarization_multiplier: powers and degrees")
{
    const auto ExE = ComplexTorus::standard(2);
    const std::vector<std::pair<LatticeEndomorphism, ComplexTorus>> cases{
        {LatticeEndomorphism(kSumDifference), ExE},
        {LatticeEndomorphism(kGaussian), ComplexTorus::standard(1)},
        {LatticeEndomorphism::multiplication(4, 2), ExE},
    };
    for (const auto& [f, T] : cases) {
        const auto q = polarization_multiplier(f, T);
        REQUIRE(q);
        CHECK(degree(f) == oracle::ipow(*q, T.half_dimension()));
        for (unsigned long l = 1; l <= 6; ++l)
            CHECK(polarization_multiplier(power(f, l), T) == oracle::ipow(*q, l));
    }
}

TEST_CASE("holomorphy of the lift")
{
    const auto E = ComplexTorus::standard(1);
    CHECK(is_holomorphic(LatticeEndomorphism(kGaussian), E));
    CHECK_FALSE(is_holomorphic(LatticeEndomorphism(IntegerMatrix{{1, 1}, {0, 1}}), E));
    CHECK(is_holomorphic(LatticeEndomorphism(kSumDifference), ComplexTorus::standard(2)));
}

TEST_CASE("product: block-diagonal assembly")
{
    const auto E = ComplexTorus::standard(1);
    const auto f = LatticeEndomorphism(kGaussian, rv({Rational(1, 2), 0}));
    auto [T1, F1] = product({E}, {f});
    CHECK(T1 == E);
    CHECK(F1 == f);

    auto [T2, F2] = product({E, E}, {LatticeEndomorphism::multiplication(2, 2), LatticeEndomorphism::multiplication(2, 3)});
    CHECK(F2.matrix() == IntegerMatrix::diagonal({2, 2, 3, 3}));
    CHECK(T2 == ComplexTorus::standard(2));

    auto [T3, F3] = product({E, E}, {LatticeEndomorphism(kGaussian), LatticeEndomorphism(IntegerMatrix{{1, 1}, {-1, 1}})});
    CHECK(polarization_multiplier(F3, T3) == Integer(2));

    CHECK_THROWS_AS(product({}, {}), ValidationError);
    CHECK_THROWS_AS(product({E}, {}), ValidationError);
}

TEST_CASE("restrict_to_sublattice: documented examples")
{
    const IntegerMatrix diagonal{{1, 0}, {0, 1}, {1, 0}, {0, 1}};
    const auto r = restrict_to_sublattice(LatticeEndomorphism::multiplication(4, 2), diagonal);
    CHECK(r.matrix() == IntegerMatrix::scalar(2, 2));

    IntegerMatrix factor(6, 2);
    factor(4, 0) = 1;
    factor(5, 1) = 1;
    const auto r2 = restrict_to_sublattice(LatticeEndomorphism(IntegerMatrix::diagonal({1, 1, 1, 1, 4, 4})), factor);
    CHECK(r2.matrix() == IntegerMatrix::scalar(2, 4));

    const IntegerMatrix first{{1, 0}, {0, 1}, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(restrict_to_sublattice(LatticeEndomorphism(kSumDifference), first), ValidationError);
}

TEST_CASE("restrict_to_sublattice: saturation and translations")
{
    const IntegerMatrix doubled{{2, 0}, {0, 2}, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(restrict_to_sublattice(LatticeEndomorphism::multiplication(4, 2), doubled), ValidationError);
    const IntegerMatrix rank_deficient{{1, 1}, {0, 0}, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(restrict_to_sublattice(LatticeEndomorphism::multiplication(4, 2), rank_deficient), ValidationError);

    const IntegerMatrix diagonal{{1, 0}, {0, 1}, {1, 0}, {0, 1}};
    const LatticeEndomorphism on_diag(IntegerMatrix::scalar(4, 2), rv({Rational(1, 3), 0, Rational(1, 3), 0}));
    CHECK(restrict_to_sublattice(on_diag, diagonal).translation() == rv({Rational(1, 3), 0}));
    const LatticeEndomorphism off_diag(IntegerMatrix::scalar(4, 2), rv({Rational(1, 3), 0, 0, 0}));
    CHECK_THROWS_AS(restrict_to_sublattice(off_diag, diagonal), ValidationError);
}

TEST_CASE("restrict_to_sublattice commutes with power")
{
    // diagonal of E x E under (1+i) x (1+i), moved by a unimodular change of basis
    const IntegerMatrix blockA = IntegerMatrix::block_diagonal({kGaussian, kGaussian});
    const IntegerMatrix skewed{{1, 0}, {0, 1}, {1, 0}, {0, 1}};
    const IntegerMatrix unimodular{{1, 0, 0, 0}, {0, 1, 0, 0}, {2, 1, 1, 0}, {-1, 3, 0, 1}};
    const IntegerMatrix basis = unimodular * skewed;
    const IntegerMatrix conj = unimodular * blockA * inverse(RationalMatrix(unimodular)).to_integer();
    const LatticeEndomorphism f(conj);
    for (unsigned long l = 1; l <= 5; ++l)
        CHECK(restrict_to_sublattice(power(f, l), basis) == power(restrict_to_sublattice(f, basis), l));
}

TEST_CASE("restrict_torus: restricted form on the diagonal is twice the standard one")
{
    const IntegerMatrix diagonal{{1, 0}, {0, 1}, {1, 0}, {0, 1}};
    const auto sub = restrict_torus(ComplexTorus::standard(2), diagonal);
    CHECK(sub.half_dimension() == 1);
    CHECK(*sub.riemann_form() == IntegerMatrix::standard_symplectic(1) * Integer(2));
    REQUIRE(sub.complex_structure());
    CHECK(polarization_multiplier(LatticeEndomorphism::multiplication(2, 2), sub) == Integer(4));
}
