#pragma once

// Fixed points of iterates x -> M^l x + t_l on R^{2g}/Z^{2g}.
//
// Fixed points of a polarized endomorphism are simple, so #Fix(f^l) = |det(M^l - I)| whenever
// that determinant is nonzero. The enumeration and brute-force routines below recover the same
// number along two further independent paths.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "avdyn/exactlinalg.hpp"
#include "avdyn/lattice_av.hpp"

namespace avdyn {

inline constexpr unsigned long long kDefaultBudget = 1'000'000;
inline constexpr double kDefaultSerreTolerance = 1e-9;

struct GrowthRow {
    unsigned long l = 0;
    Integer exact_count;
    Integer asymptote;  // q^{g l}
    Rational ratio;     // exact_count / asymptote
};

struct ComparisonRow {
    unsigned long l = 0;
    std::optional<Integer> exact_count;  // empty on a degenerate row
    Integer formula_value;
    std::optional<Integer> difference;   // exact_count - formula_value
    std::string note;
};

struct ComparisonReport {
    std::string formula_label;
    std::vector<ComparisonRow> rows;
};

struct SerreReport {
    Integer q;
    IntegerPolynomial charpoly;
    IntegerPolynomial squarefree_part;
    std::vector<std::complex<double>> roots;  // distinct roots of charpoly
    double max_residual = 0.0;                // max | |lambda|^2 - q |
    double tolerance = kDefaultSerreTolerance;
    bool converged = false;
    bool passed = false;
};

// det(M^l - I) for the iterate.
Integer fixed_point_determinant(const LatticeEndomorphism& f, unsigned long l);

Integer count_fixed(const LatticeEndomorphism& f, unsigned long l);
// Sorted canonical representatives; refuses (BudgetError) above budget points.
std::vector<TorsionPoint> enumerate_fixed(const LatticeEndomorphism& f, unsigned long l,
                                          unsigned long long budget = kDefaultBudget);
// Exhaustive scan of the grid (1/N) Z^{2g} / Z^{2g} with N = D * den(t_l), D the largest
// elementary divisor of M^l - I.
Integer brute_force_count(const LatticeEndomorphism& f, unsigned long l,
                          unsigned long long budget = kDefaultBudget);
// Number of grid points brute_force_count would visit, or nullopt when it exceeds 2^64.
std::optional<unsigned long long> brute_force_grid_size(const LatticeEndomorphism& f, unsigned long l);

std::vector<GrowthRow> growth_table(const LatticeEndomorphism& f, const Integer& q, std::size_t g,
                                    unsigned long l_max);

// Product over factors and their copies of (q^l - 1)^{g}.
Integer theorem_a_formula(const std::vector<SimpleFactorSpec>& factors, unsigned long l);
ComparisonReport compare_exact(const LatticeEndomorphism& f, const std::vector<SimpleFactorSpec>& factors,
                               unsigned long l_max);

Integer lefschetz_number(const LatticeEndomorphism& f, unsigned long l);

SerreReport serre_eigenvalue_check(const LatticeEndomorphism& f, const Integer& q,
                                   double tolerance = kDefaultSerreTolerance);

// Fixed points of f^{m l} on the translate Y = V + Q, V spanned by the columns of basis.
Integer periodic_subvariety_count(const LatticeEndomorphism& f, const IntegerMatrix& basis,
                                  const TorsionPoint& translate, unsigned long period, unsigned long l);

// Exposed for testing.
namespace detail {
IntegerPolynomial squarefree_part(const IntegerPolynomial& p);
std::optional<std::vector<std::complex<long double>>> polynomial_roots(const IntegerPolynomial& p);
} // namespace detail

} // namespace avdyn
