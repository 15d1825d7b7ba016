#include "avdyn/quotient_dyn.hpp"

#include <algorithm>
#include <set>

#include "avdyn/errors.hpp"

namespace avdyn {

AffineAutomorphism::AffineAutomorphism(IntegerMatrix linear, RationalVector translation)
    : U_(std::move(linear)), s_(reduce_mod_one(std::move(translation)))
{
    if (!U_.is_square())
        throw ValidationError("automorphism: linear part must be square");
    if (s_.size() != U_.rows())
        throw ValidationError("automorphism: translation length does not match linear part");
    if (abs(det(U_)) != 1)
        throw ValidationError("automorphism: linear part is not unimodular");
}

bool AffineAutomorphism::is_identity() const
{
    return U_ == IntegerMatrix::identity(U_.rows()) &&
           std::all_of(s_.begin(), s_.end(), [](const Rational& x) { return x == 0; });
}

TorsionPoint AffineAutomorphism::apply(const TorsionPoint& p) const
{
    RationalVector y = U_ * p.coordinates();
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += s_[i];
    return TorsionPoint(std::move(y));
}

AffineAutomorphism compose(const AffineAutomorphism& a, const AffineAutomorphism& b)
{
    if (a.rank() != b.rank())
        throw ValidationError("compose: automorphisms of different rank");
    RationalVector s = a.linear() * b.translation();
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] += a.translation()[i];
    return AffineAutomorphism(a.linear() * b.linear(), std::move(s));
}

bool has_fixed_point(const AffineAutomorphism& a)
{
    const IntegerMatrix A = a.linear() - IntegerMatrix::identity(a.rank());
    const auto snf = smith_normal_form(A);
    // x = V y:  D y = -U s (mod 1). Rows with d_i != 0 are always solvable over R/Z.
    const RationalVector rhs = snf.U * a.translation();
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        const bool zero_row = i >= snf.elementary_divisors.size() || snf.elementary_divisors[i] == 0;
        if (zero_row && rhs[i].get_den() != 1)
            return false;
    }
    return true;
}

namespace {

std::size_t index_of(const GroupAction& action, const AffineAutomorphism& x)
{
    auto it = std::find(action.elements.begin(), action.elements.end(), x);
    return static_cast<std::size_t>(it - action.elements.begin());
}

} // namespace

ActionValidation validate_action(const GroupAction& action)
{
    ActionValidation v;
    if (action.elements.empty()) {
        v.violations.push_back("identity: group has no elements");
        return v;
    }
    const std::size_t n = action.elements.front().rank();
    for (const auto& e : action.elements)
        if (e.rank() != n) {
            v.violations.push_back("rank: elements act on lattices of different rank");
            return v;
        }

    const AffineAutomorphism id(IntegerMatrix::identity(n), RationalVector(n));
    const std::size_t N = action.order();
    v.has_identity = index_of(action, id) < N;
    if (!v.has_identity)
        v.violations.push_back("identity: identity element missing");

    v.closed = true;
    for (std::size_t i = 0; i < N && v.closed; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (index_of(action, compose(action.elements[i], action.elements[j])) == N) {
                v.closed = false;
                v.violations.push_back("closure: g" + std::to_string(i) + " o g" + std::to_string(j) +
                                       " is not in the group");
                break;
            }

    v.has_inverses = true;
    for (std::size_t i = 0; i < N; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < N && !found; ++j)
            found = compose(action.elements[i], action.elements[j]).is_identity();
        if (!found) {
            v.has_inverses = false;
            v.violations.push_back("inverses: g" + std::to_string(i) + " has no inverse in the group");
        }
    }

    v.free = true;
    for (std::size_t i = 0; i < N; ++i) {
        const auto& e = action.elements[i];
        if (!e.is_identity() && has_fixed_point(e)) {
            v.free = false;
            v.violations.push_back("freeness: g" + std::to_string(i) + " has a fixed point");
        }
    }
    return v;
}

LiftCompatibility lift_compatibility(const LatticeEndomorphism& f, const GroupAction& action)
{
    LiftCompatibility out;
    for (std::size_t i = 0; i < action.order(); ++i) {
        const auto& g = action.elements[i];
        if (g.rank() != f.rank())
            throw ValidationError("lift_compatibility: rank mismatch between endomorphism and group");
        const LatticeEndomorphism lhs = compose(f, g.as_endomorphism());
        std::size_t match = action.order();
        for (std::size_t j = 0; j < action.order() && match == action.order(); ++j)
            if (compose(action.elements[j].as_endomorphism(), f) == lhs)
                match = j;
        if (match == action.order()) {
            out.compatible = false;
            out.permutation.clear();
            out.failure = "no g' with f o g" + std::to_string(i) + " = g' o f";
            return out;
        }
        out.permutation.push_back(match);
    }
    out.compatible = true;
    return out;
}

QuotientBound quotient_fixed_lower_bound(const LatticeEndomorphism& f, const GroupAction& action,
                                         const Integer& q, unsigned long l, unsigned long long budget)
{
    const auto validation = validate_action(action);
    if (!validation.valid())
        throw ValidationError("quotient_fixed_lower_bound: invalid action: " + validation.violations.front());
    const auto lift = lift_compatibility(f, action);
    if (!lift.compatible)
        throw ValidationError("quotient_fixed_lower_bound: endomorphism does not descend: " + lift.failure);

    const auto fixed = enumerate_fixed(f, l, budget);
    const std::set<TorsionPoint> fixed_set(fixed.begin(), fixed.end());
    std::set<TorsionPoint> seen;
    Integer orbits = 0;
    for (const auto& p : fixed) {
        if (seen.count(p))
            continue;
        ++orbits;
        for (const auto& g : action.elements) {
            TorsionPoint image = g.apply(p);
            if (fixed_set.count(image))
                seen.insert(std::move(image));
        }
    }

    QuotientBound out;
    out.upstairs_count = Integer(static_cast<unsigned long>(fixed.size()));
    out.orbit_count = orbits;
    out.group_order = action.order();
    const Integer order(static_cast<unsigned long>(action.order()));
    out.bound = Rational(out.upstairs_count, order);
    out.bound.canonicalize();
    Integer ql;
    mpz_pow_ui(ql.get_mpz_t(), q.get_mpz_t(), l);
    Integer lit;
    mpz_pow_ui(lit.get_mpz_t(), Integer(ql - 1).get_mpz_t(), f.rank() / 2);
    out.literal_bound = Rational(lit, order);
    out.literal_bound.canonicalize();
    out.bound_holds = Rational(orbits) >= out.bound;
    out.literal_bound_holds = Rational(orbits) >= out.literal_bound;
    return out;
}

} // namespace avdyn
