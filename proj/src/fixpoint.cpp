#include "avdyn/fixpoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "avdyn/errors.hpp"

namespace avdyn {

namespace {

IntegerMatrix iterate_minus_identity(const LatticeEndomorphism& f, unsigned long l)
{
    if (l == 0)
        throw ValidationError("iterate l must be >= 1");
    return matrix_power(f.matrix(), l) - IntegerMatrix::identity(f.rank());
}

[[noreturn]] void throw_degenerate(unsigned long l)
{
    throw DegenerateError("degenerate: det(M^" + std::to_string(l) +
                          " - I) = 0, positive-dimensional fixed locus possible");
}

Integer int_pow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/*{{{ rational polynomial helpers (ascending coefficients) */
using QPoly = std::vector<Rational>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly to_qpoly(const IntegerPolynomial& p)
{
    QPoly q;
    for (const auto& c : p.coefficients())
        q.emplace_back(c);
    return q;
}

QPoly derivative(const QPoly& p)
{
    QPoly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * Rational(static_cast<long>(k)));
    trim(d);
    return d;
}

// Returns quotient; p is replaced by the remainder.
QPoly divide(QPoly& p, const QPoly& d)
{
    trim(p);
    QPoly quot;
    if (p.size() < d.size())
        return quot;
    quot.assign(p.size() - d.size() + 1, Rational(0));
    while (!p.empty() && p.size() >= d.size()) {
        const std::size_t shift = p.size() - d.size();
        const Rational c = p.back() / d.back();
        quot[shift] = c;
        for (std::size_t k = 0; k < d.size(); ++k)
            p[shift + k] -= c * d[k];
        trim(p);
    }
    trim(quot);
    return quot;
}

QPoly gcd(QPoly a, QPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        divide(a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

IntegerPolynomial to_primitive(const QPoly& p)
{
    Integer den = 1;
    for (const auto& c : p)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    Integer content = 0;
    for (const auto& c : p) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (content != 0)
        for (auto& v : ints)
            v /= content;
    if (!ints.empty() && ints.back() < 0)
        for (auto& v : ints)
            v = -v;
    return IntegerPolynomial(std::move(ints));
}
/*}}}*/

} // namespace

Integer fixed_point_determinant(const LatticeEndomorphism& f, unsigned long l)
{
    return det(iterate_minus_identity(f, l));
}

Integer count_fixed(const LatticeEndomorphism& f, unsigned long l)
{
    Integer d = fixed_point_determinant(f, l);
    if (d == 0)
        throw_degenerate(l);
    return abs(d);
}

std::vector<TorsionPoint> enumerate_fixed(const LatticeEndomorphism& f, unsigned long l, unsigned long long budget)
{
    const IntegerMatrix A = iterate_minus_identity(f, l);
    const LatticeEndomorphism fl = power(f, l);
    const auto snf = smith_normal_form(A);
    const std::size_t n = A.rows();

    Integer total = 1;
    for (const auto& d : snf.elementary_divisors)
        total *= d;
    if (total == 0)
        throw_degenerate(l);
    if (total > Integer(std::to_string(budget)))
        throw BudgetError("enumerate_fixed: " + total.get_str() + " fixed points exceed budget " +
                          std::to_string(budget));

    // A x = -t_l (mod 1) with x = V y becomes D y = -U t_l (mod 1).
    RationalVector rhs = snf.U * fl.translation();
    for (auto& c : rhs)
        c = frac(-c);

    std::vector<unsigned long> dims(n);
    for (std::size_t i = 0; i < n; ++i)
        dims[i] = snf.elementary_divisors[i].get_ui();

    // Work with numerators over E = lcm(d_i) * den(rhs): E y_i = (E / d_i)(rhs_i + k_i) and x = V y.
    Integer E = 1;
    for (const auto& d : snf.elementary_divisors)
        mpz_lcm(E.get_mpz_t(), E.get_mpz_t(), d.get_mpz_t());
    E *= common_denominator(rhs);
    std::vector<IntegerVector> step(n, IntegerVector(n));
    IntegerVector w(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Integer s = E / snf.elementary_divisors[j];
        const Integer base = Rational(rhs[j] * Rational(s)).get_num();
        for (std::size_t i = 0; i < n; ++i) {
            step[j][i] = snf.V(i, j) * s;
            w[i] += snf.V(i, j) * base;
        }
    }

    // Numerators are stored flat, as machine integers when E allows.
    const std::size_t count = total.get_ui();
    const bool small = E.fits_slong_p();
    std::vector<long> flat_small;
    std::vector<Integer> flat_big;
    if (small)
        flat_small.reserve(count * n);
    else
        flat_big.reserve(count * n);
    std::vector<unsigned long> k(n, 0);
    Integer r;
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) {
            mpz_fdiv_r(r.get_mpz_t(), w[i].get_mpz_t(), E.get_mpz_t());
            if (small)
                flat_small.push_back(r.get_si());
            else
                flat_big.push_back(r);
        }
        std::size_t j = 0;
        for (; j < n; ++j) {
            if (++k[j] < dims[j]) {
                for (std::size_t i = 0; i < n; ++i)
                    w[i] += step[j][i];
                break;
            }
            k[j] = 0;
            for (std::size_t i = 0; i < n; ++i)
                w[i] -= step[j][i] * (dims[j] - 1);
        }
        if (j == n)
            break;
    }

    std::vector<std::size_t> order(count);
    for (std::size_t p = 0; p < count; ++p)
        order[p] = p;
    auto sort_by = [&](const auto& flat) {
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(flat.begin() + a * n, flat.begin() + (a + 1) * n,
                                                flat.begin() + b * n, flat.begin() + (b + 1) * n);
        });
    };
    if (small)
        sort_by(flat_small);
    else
        sort_by(flat_big);

    std::vector<TorsionPoint> points;
    points.reserve(count);
    for (std::size_t p : order) {
        RationalVector x(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (small)
                x[i].get_num() = flat_small[p * n + i];
            else
                x[i].get_num() = flat_big[p * n + i];
            x[i].get_den() = E;
            x[i].canonicalize();
        }
        points.emplace_back(std::move(x));
    }
    return points;
}

std::optional<unsigned long long> brute_force_grid_size(const LatticeEndomorphism& f, unsigned long l)
{
    const IntegerMatrix A = iterate_minus_identity(f, l);
    const auto snf = smith_normal_form(A);
    const Integer D = snf.elementary_divisors.back();
    if (D == 0)
        throw_degenerate(l);
    const Integer N = D * common_denominator(power(f, l).translation());
    Integer size = int_pow(N, A.rows());
    if (!size.fits_ulong_p() || sizeof(unsigned long) < sizeof(unsigned long long))
        return std::nullopt;
    return size.get_ui();
}

Integer brute_force_count(const LatticeEndomorphism& f, unsigned long l, unsigned long long budget)
{
    const IntegerMatrix A = iterate_minus_identity(f, l);
    const LatticeEndomorphism fl = power(f, l);
    const auto snf = smith_normal_form(A);
    const Integer D = snf.elementary_divisors.back();
    if (D == 0)
        throw_degenerate(l);
    // Solutions of A x = -t_l mod 1 satisfy e A x in Z^n, e = den(t_l); D A^{-1} is integral.
    const Integer N = D * common_denominator(fl.translation());
    const std::size_t n = A.rows();
    const auto grid = brute_force_grid_size(f, l);
    if (!grid || *grid > budget)
        throw BudgetError("brute_force_count: grid of " + int_pow(N, n).get_str() + " points exceeds budget " +
                          std::to_string(budget));

    // x = k / N is fixed iff A k + N t_l = 0 (mod N). Walk k as an odometer, updating A k incrementally.
    IntegerVector acc(n);
    for (std::size_t i = 0; i < n; ++i)
        acc[i] = Rational(fl.translation()[i] * Rational(N)).get_num();
    const unsigned long Nu = N.get_ui();
    std::vector<unsigned long> k(n, 0);
    Integer hits = 0;
    for (;;) {
        bool fixed = true;
        for (std::size_t i = 0; i < n && fixed; ++i)
            fixed = mpz_divisible_ui_p(acc[i].get_mpz_t(), Nu) != 0;
        if (fixed)
            ++hits;
        std::size_t j = 0;
        for (; j < n; ++j) {
            if (++k[j] < Nu) {
                for (std::size_t i = 0; i < n; ++i)
                    acc[i] += A(i, j);
                break;
            }
            k[j] = 0;
            for (std::size_t i = 0; i < n; ++i)
                acc[i] -= A(i, j) * (N - 1);
        }
        if (j == n)
            break;
    }
    return hits;
}

std::vector<GrowthRow> growth_table(const LatticeEndomorphism& f, const Integer& q, std::size_t g,
                                    unsigned long l_max)
{
    if (q <= 1)
        throw ValidationError("growth_table: multiplier q must be > 1");
    if (2 * g != f.rank())
        throw ValidationError("growth_table: g = " + std::to_string(g) + " does not match lattice rank " +
                              std::to_string(f.rank()));
    if (l_max == 0)
        throw ValidationError("growth_table: l_max must be >= 1");
    std::vector<GrowthRow> rows;
    rows.reserve(l_max);
    for (unsigned long l = 1; l <= l_max; ++l) {
        GrowthRow row;
        row.l = l;
        row.exact_count = count_fixed(f, l);
        row.asymptote = int_pow(q, g * l);
        row.ratio = Rational(row.exact_count, row.asymptote);
        row.ratio.canonicalize();
        rows.push_back(std::move(row));
    }
    return rows;
}

Integer theorem_a_formula(const std::vector<SimpleFactorSpec>& factors, unsigned long l)
{
    if (l == 0)
        throw ValidationError("theorem_a_formula: l must be >= 1");
    Integer value = 1;
    for (const auto& fac : factors)
        value *= int_pow(int_pow(fac.q, l) - 1, fac.g * fac.multiplicity);
    return value;
}

ComparisonReport compare_exact(const LatticeEndomorphism& f, const std::vector<SimpleFactorSpec>& factors,
                               unsigned long l_max)
{
    ComparisonReport report;
    report.formula_label = "prod_i (q_i^l - 1)^{g_i}, constant C omitted";
    for (unsigned long l = 1; l <= l_max; ++l) {
        ComparisonRow row;
        row.l = l;
        row.formula_value = theorem_a_formula(factors, l);
        try {
            row.exact_count = count_fixed(f, l);
            row.difference = *row.exact_count - row.formula_value;
        } catch (const DegenerateError&) {
            row.note = "degenerate";
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

Integer lefschetz_number(const LatticeEndomorphism& f, unsigned long l)
{
    if (l == 0)
        throw ValidationError("lefschetz_number: l must be >= 1");
    return exterior_trace_sum(matrix_power(f.matrix(), l));
}

namespace detail {

IntegerPolynomial squarefree_part(const IntegerPolynomial& p)
{
    if (p.degree() <= 0)
        return p;
    QPoly num = to_qpoly(p);
    const QPoly g = gcd(num, derivative(num));
    QPoly quot = divide(num, g);
    return to_primitive(quot);
}

std::optional<std::vector<std::complex<long double>>> polynomial_roots(const IntegerPolynomial& p)
{
    using C = std::complex<long double>;
    const int n = p.degree();
    if (n < 1)
        return std::vector<C>{};
    std::vector<long double> a(n + 1);
    for (int k = 0; k <= n; ++k)
        a[k] = p.coefficients()[k].get_d();

    auto eval = [&](C z, C& dz) {
        C v = a[n];
        dz = 0;
        for (int k = n - 1; k >= 0; --k) {
            dz = dz * z + v;
            v = v * z + a[k];
        }
        return v;
    };

    // Cauchy bound on the root moduli.
    long double bound = 0;
    for (int k = 0; k < n; ++k)
        bound = std::max(bound, std::fabs(a[k] / a[n]));
    bound += 1;

    // Aberth-Ehrlich iteration from points spread on a circle.
    std::vector<C> z(n);
    for (int k = 0; k < n; ++k) {
        const long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[k] = std::polar(bound * 0.5L, ang);
    }
    bool converged = false;
    for (int iter = 0; iter < 1000 && !converged; ++iter) {
        long double biggest = 0;
        for (int k = 0; k < n; ++k) {
            C dp;
            const C pv = eval(z[k], dp);
            if (pv == C(0))
                continue;
            const C ratio = pv / dp;
            C repulse = 0;
            for (int j = 0; j < n; ++j)
                if (j != k)
                    repulse += C(1) / (z[k] - z[j]);
            const C step = ratio / (C(1) - ratio * repulse);
            z[k] -= step;
            biggest = std::max(biggest, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
        }
        converged = biggest < 1e-17L;
    }
    if (!converged)
        return std::nullopt;
    // Newton polish.
    for (auto& r : z)
        for (int it = 0; it < 3; ++it) {
            C dp;
            const C pv = eval(r, dp);
            if (dp != C(0))
                r -= pv / dp;
        }
    return z;
}

} // namespace detail

SerreReport serre_eigenvalue_check(const LatticeEndomorphism& f, const Integer& q, double tolerance)
{
    SerreReport report;
    report.q = q;
    report.tolerance = tolerance;
    report.charpoly = charpoly(f.matrix());
    // Repeated roots would be resolved only to ~eps^{1/mult}; isolate the distinct ones.
    report.squarefree_part = detail::squarefree_part(report.charpoly);
    const auto roots = detail::polynomial_roots(report.squarefree_part);
    if (!roots) {
        report.converged = false;
        report.passed = false;
        report.max_residual = std::numeric_limits<double>::infinity();
        return report;
    }
    report.converged = true;
    const long double qd = q.get_d();
    long double worst = 0;
    for (const auto& r : *roots) {
        worst = std::max(worst, std::fabs(std::norm(r) - qd));
        report.roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    report.max_residual = static_cast<double>(worst);
    report.passed = report.max_residual <= tolerance;
    return report;
}

Integer periodic_subvariety_count(const LatticeEndomorphism& f, const IntegerMatrix& basis,
                                  const TorsionPoint& translate, unsigned long period, unsigned long l)
{
    if (period == 0)
        throw ValidationError("periodic_subvariety_count: period must be >= 1");
    if (translate.size() != f.rank())
        throw ValidationError("periodic_subvariety_count: translate has wrong length");
    const LatticeEndomorphism fm = power(f, period);
    if (fm.apply(translate) != translate)
        throw ValidationError("periodic_subvariety_count: translate " + translate.to_string() +
                              " is not fixed by f^" + std::to_string(period));
    // With Q fixed by f^m, f^{ml}(Q + v) = Q + M^{ml} v, so only the linear part acts on V.
    const LatticeEndomorphism restricted =
        restrict_to_sublattice(LatticeEndomorphism(fm.matrix()), basis);
    try {
        return count_fixed(restricted, l);
    } catch (const DegenerateError&) {
        throw DegenerateError("periodic_subvariety_count: degenerate restriction, det(M'^" + std::to_string(l) +
                              " - I) = 0");
    }
}

} // namespace avdyn
