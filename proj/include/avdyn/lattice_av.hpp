#pragma once

// Complex tori C^g / Z^{2g} described through their period lattice: endomorphisms act by
// integer matrices on the lattice, polarizations are integral alternating Riemann forms.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "avdyn/exactlinalg.hpp"

namespace avdyn {

class ComplexTorus {
public:
    // Validates J^2 = -I, S alternating and nondegenerate, and when both are present
    // J^t S J = S with J^t S positive definite.
    ComplexTorus(std::size_t g, std::optional<RationalMatrix> complex_structure = std::nullopt,
                 std::optional<IntegerMatrix> riemann_form = std::nullopt);

    // Product of g elliptic curves C / Z[i] with the standard form on each factor.
    static ComplexTorus standard(std::size_t g);

    std::size_t half_dimension() const { return g_; }
    std::size_t rank() const { return 2 * g_; }
    const std::optional<RationalMatrix>& complex_structure() const { return J_; }
    const std::optional<IntegerMatrix>& riemann_form() const { return S_; }

    bool operator==(const ComplexTorus& o) const { return g_ == o.g_ && J_ == o.J_ && S_ == o.S_; }

private:
    std::size_t g_;
    std::optional<RationalMatrix> J_;
    std::optional<IntegerMatrix> S_;
};

// A point of the torus, stored as its representative in [0,1)^{2g}.
class TorsionPoint {
public:
    explicit TorsionPoint(RationalVector coordinates);

    const RationalVector& coordinates() const { return coords_; }
    std::size_t size() const { return coords_.size(); }

    bool operator==(const TorsionPoint& o) const { return coords_ == o.coords_; }
    bool operator<(const TorsionPoint& o) const;
    std::string to_string() const;

private:
    RationalVector coords_;
};

// x -> M x + t on R^{2g} / Z^{2g}; t is kept reduced mod Z^{2g}.
class LatticeEndomorphism {
public:
    explicit LatticeEndomorphism(IntegerMatrix matrix);
    LatticeEndomorphism(IntegerMatrix matrix, RationalVector translation);

    static LatticeEndomorphism identity(std::size_t rank);
    static LatticeEndomorphism multiplication(std::size_t rank, const Integer& m);

    const IntegerMatrix& matrix() const { return M_; }
    const RationalVector& translation() const { return t_; }
    std::size_t rank() const { return M_.rows(); }
    bool is_translation_free() const;

    RationalVector apply(const RationalVector& x) const;  // reduced mod 1
    TorsionPoint apply(const TorsionPoint& p) const;

    bool operator==(const LatticeEndomorphism& o) const { return M_ == o.M_ && t_ == o.t_; }

private:
    IntegerMatrix M_;
    RationalVector t_;
};

struct SimpleFactorSpec {
    std::size_t g = 1;           // dimension of the simple factor
    Integer q = 2;               // polarization multiplier, >= 2
    std::size_t multiplicity = 1;

    SimpleFactorSpec() = default;
    SimpleFactorSpec(std::size_t g_, Integer q_, std::size_t r);
    bool operator==(const SimpleFactorSpec& o) const = default;
};

// (f o h)(x) = M_f M_h x + M_f t_h + t_f.
LatticeEndomorphism compose(const LatticeEndomorphism& f, const LatticeEndomorphism& h);
// l >= 1; the accumulated translation is (M^{l-1} + ... + I) t, built by recursion.
LatticeEndomorphism power(const LatticeEndomorphism& f, unsigned long l);
// |det M|; zero means f is not an isogeny.
Integer degree(const LatticeEndomorphism& f);

// Does M commute with the torus' complex structure? Vacuously true without J.
bool is_holomorphic(const LatticeEndomorphism& f, const ComplexTorus& torus);

struct ComplementaryIsogeny {
    LatticeEndomorphism dual;
    Integer m;  // dual o f = f o dual = [m]
};
ComplementaryIsogeny complementary_isogeny(const LatticeEndomorphism& f);

// q with M^t S M = q S, when such an integer q >= 1 exists.
std::optional<Integer> polarization_multiplier(const LatticeEndomorphism& f, const ComplexTorus& torus);

std::pair<ComplexTorus, LatticeEndomorphism> product(const std::vector<ComplexTorus>& tori,
                                                     const std::vector<LatticeEndomorphism>& endos);

// Rank-2r saturated sublattice given by the columns of basis (2g x 2r).
// Returns M' with M B = B M' and the translation in sublattice coordinates.
LatticeEndomorphism restrict_to_sublattice(const LatticeEndomorphism& f, const IntegerMatrix& basis);

// B^t S B, and J' with J B = B J' when J is present and preserves the span.
ComplexTorus restrict_torus(const ComplexTorus& torus, const IntegerMatrix& basis);

// Throws ValidationError unless basis has full column rank, even column count and SNF divisors all 1.
void require_saturated(const IntegerMatrix& basis);
// Integral left inverse of a saturated basis: P B = I.
IntegerMatrix left_inverse(const IntegerMatrix& basis);

} // namespace avdyn
