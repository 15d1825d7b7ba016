#pragma once

// Finite groups of affine automorphisms acting on a torus, and fixed-point counts pushed
// down to the quotient through orbit counting. The quotient itself is never built.

#include <string>
#include <vector>

#include "avdyn/exactlinalg.hpp"
#include "avdyn/fixpoint.hpp"
#include "avdyn/lattice_av.hpp"

namespace avdyn {

class AffineAutomorphism {
public:
    AffineAutomorphism(IntegerMatrix linear, RationalVector translation);

    const IntegerMatrix& linear() const { return U_; }
    const RationalVector& translation() const { return s_; }
    std::size_t rank() const { return U_.rows(); }
    bool is_identity() const;

    LatticeEndomorphism as_endomorphism() const { return LatticeEndomorphism(U_, s_); }
    TorsionPoint apply(const TorsionPoint& p) const;

    bool operator==(const AffineAutomorphism& o) const { return U_ == o.U_ && s_ == o.s_; }

private:
    IntegerMatrix U_;
    RationalVector s_;
};

AffineAutomorphism compose(const AffineAutomorphism& a, const AffineAutomorphism& b);

struct GroupAction {
    std::vector<AffineAutomorphism> elements;
    std::size_t order() const { return elements.size(); }
};

struct ActionValidation {
    bool has_identity = false;
    bool closed = false;
    bool has_inverses = false;
    bool free = false;
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

// Does (U - I) x = -s (mod Z^n) have a solution? Decided exactly through the SNF of U - I.
bool has_fixed_point(const AffineAutomorphism& a);

ActionValidation validate_action(const GroupAction& action);

struct LiftCompatibility {
    bool compatible = false;
    std::vector<std::size_t> permutation;  // f o g_i = g_{permutation[i]} o f
    std::string failure;
};

LiftCompatibility lift_compatibility(const LatticeEndomorphism& f, const GroupAction& action);

struct QuotientBound {
    Integer upstairs_count;  // #Fix(f^l) on the torus
    Integer orbit_count;     // G-orbits meeting Fix(f^l)
    std::size_t group_order = 1;
    Rational bound;          // upstairs_count / |G|
    Rational literal_bound;  // (q^l - 1)^n / |G|, n the torus dimension
    bool bound_holds = false;          // orbit_count >= bound
    bool literal_bound_holds = false;  // orbit_count >= literal_bound, reported only
};

QuotientBound quotient_fixed_lower_bound(const LatticeEndomorphism& f, const GroupAction& action,
                                         const Integer& q, unsigned long l,
                                         unsigned long long budget = kDefaultBudget);

} // namespace avdyn
