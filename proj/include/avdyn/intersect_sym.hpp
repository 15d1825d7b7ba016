#pragma once

#include <cstddef>
#include <vector>

#include "avdyn/exactlinalg.hpp"

namespace avdyn {

// One term c * D_1^{e_1} ... D_r^{e_r} on X^r, each D_i pulled back from the i-th factor.
struct MultidegreeMonomial {
    std::vector<std::size_t> exponents;
    Integer coefficient;
};

inline constexpr std::size_t kMaxExpansionDegree = 16;

// Coefficient of D_1^n ... D_r^n in (F_1 + ... + F_r)^{rn}, where D_i^{n+1} = 0.
Integer expand_sum_power(std::size_t r, std::size_t n);

// All surviving monomials of (F_1 + ... + F_r)^k under D_i^{n+1} = 0.
std::vector<MultidegreeMonomial> expand_monomials(std::size_t r, std::size_t n, std::size_t k);

struct ProddivComparison {
    std::size_t r = 0;
    std::size_t n = 0;
    Integer expansion;    // computed coefficient
    Integer literal;      // (r!)^n, the "occurs r!^n times" count
    bool agree = false;
};
ProddivComparison proddiv_comparison(std::size_t r, std::size_t n);

// Pf(M^t S M) against det(M) Pf(S).
struct PullbackDegreeCheck {
    Integer lhs;
    Integer rhs;
    bool equal = false;
};
PullbackDegreeCheck pullback_degree_check(const IntegerMatrix& M, const IntegerMatrix& S);

} // namespace avdyn
