#include "avdyn/intersect_sym.hpp"

#include <map>

#include "avdyn/errors.hpp"

namespace avdyn {

std::vector<MultidegreeMonomial> expand_monomials(std::size_t r, std::size_t n, std::size_t k)
{
    if (r == 0 || n == 0)
        throw ValidationError("expand: factor count and dimension must be >= 1");
    if (k > kMaxExpansionDegree)
        throw ValidationError("expand: degree " + std::to_string(k) + " exceeds cap " +
                              std::to_string(kMaxExpansionDegree));
    // Multiply by (F_1 + ... + F_r) one factor at a time, dropping D_i^{n+1} terms eagerly.
    std::map<std::vector<std::size_t>, Integer> terms{{std::vector<std::size_t>(r, 0), Integer(1)}};
    for (std::size_t step = 0; step < k; ++step) {
        std::map<std::vector<std::size_t>, Integer> next;
        for (const auto& [exps, c] : terms)
            for (std::size_t i = 0; i < r; ++i) {
                if (exps[i] == n)
                    continue;
                auto e = exps;
                ++e[i];
                next[e] += c;
            }
        terms = std::move(next);
    }
    std::vector<MultidegreeMonomial> out;
    out.reserve(terms.size());
    for (auto& [exps, c] : terms)
        out.push_back({exps, c});
    return out;
}

Integer expand_sum_power(std::size_t r, std::size_t n)
{
    if (r * n > kMaxExpansionDegree)
        throw ValidationError("expand_sum_power: r*n = " + std::to_string(r * n) + " exceeds cap " +
                              std::to_string(kMaxExpansionDegree));
    const auto monomials = expand_monomials(r, n, r * n);
    const std::vector<std::size_t> target(r, n);
    for (const auto& m : monomials)
        if (m.exponents == target)
            return m.coefficient;
    return 0;
}

ProddivComparison proddiv_comparison(std::size_t r, std::size_t n)
{
    ProddivComparison c;
    c.r = r;
    c.n = n;
    c.expansion = expand_sum_power(r, n);
    Integer rf;
    mpz_fac_ui(rf.get_mpz_t(), r);
    mpz_pow_ui(c.literal.get_mpz_t(), rf.get_mpz_t(), n);
    c.agree = c.expansion == c.literal;
    return c;
}

PullbackDegreeCheck pullback_degree_check(const IntegerMatrix& M, const IntegerMatrix& S)
{
    if (!S.is_square() || S.rows() % 2 != 0 || !S.is_skew_symmetric())
        throw ValidationError("pullback_degree_check: S must be skew-symmetric of even dimension");
    if (det(S) == 0)
        throw ValidationError("pullback_degree_check: S is degenerate");
    if (!M.is_square() || M.rows() != S.rows())
        throw ValidationError("pullback_degree_check: M must be square with the dimension of S");
    PullbackDegreeCheck out;
    out.lhs = pfaffian(M.transpose() * S * M);
    out.rhs = det(M) * pfaffian(S);
    out.equal = out.lhs == out.rhs;
    return out;
}

} // namespace avdyn
