// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "avdyn/errors.hpp"
#include "avdyn/fixpoint.hpp"
#include "avdyn/intersect_sym.hpp"
#include "avdyn/quotient_dyn.hpp"
#include "avdyn/report.hpp"
#include "avdyn/scenario.hpp"
#include "oracles.hpp"

using namespace avdyn;

namespace {

constexpr double kGrowthTolerance = 0.005;
constexpr double kSerreTolerance = 1e-9;
constexpr unsigned long long kTripleBudget = 1'000'000;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok)
                detail << what;
            ok = false;
        }
    }
};

double as_double(const Rational& r) { return r.get_d(); }

Scenario builtin(const std::string& name) { return *builtin_scenario(name); }

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/*{{{ criteria */
void torsion_law(Outcome& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (long m : {2, 3, 4})
        for (std::size_t g : {1, 2}) {
            const auto f = LatticeEndomorphism::multiplication(2 * g, m);
            for (unsigned long l = 1; l <= 5; ++l) {
                const Integer expect = oracle::ipow(oracle::ipow(m, l) - 1, 2 * g);
                o.expect(count_fixed(f, l) == expect, "m=" + std::to_string(m) + " g=" + std::to_string(g) +
                                                          " l=" + std::to_string(l));
            }
        }
    const double dt = seconds_since(t0);
    o.expect(dt < 1.0, "took " + std::to_string(dt) + " s");
    o.detail << (o.ok ? "" : "; ") << "m in {2,3,4}, g in {1,2}, l <= 5";
}

void triple_path(Outcome& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (const auto& name : builtin_scenario_names()) {
        const Scenario s = builtin(name);
        for (unsigned long l = 1; l <= 6; ++l) {
            if (fixed_point_determinant(s.endomorphism, l) == 0)
                continue;
            const auto grid = brute_force_grid_size(s.endomorphism, l);
            if (!grid || *grid > kTripleBudget)
                continue;
            const Integer a = count_fixed(s.endomorphism, l);
            const Integer b = Integer(static_cast<unsigned long>(enumerate_fixed(s.endomorphism, l, kTripleBudget).size()));
            const Integer c = brute_force_count(s.endomorphism, l, kTripleBudget);
            o.expect(a == b && b == c, name + " l=" + std::to_string(l) + ": " + a.get_str() + "/" + b.get_str() +
                                           "/" + c.get_str() + "; ");
            ++checked;
        }
    }
    const double dt = seconds_since(t0);
    o.expect(checked > 0, "nothing checked; ");
    o.expect(dt < 30.0, "took " + std::to_string(dt) + " s; ");
    o.detail << checked << " (scenario, l) pairs with grid <= 1e6";
}

void growth(Outcome& o)
{
    for (const auto& [name, q] : {std::pair<std::string, long>{"mult-by-2", 4}, {"gaussian-cm", 2}}) {
        const Scenario s = builtin(name);
        const auto rows = growth_table(s.endomorphism, q, s.torus.half_dimension(), 20);
        const double r20 = as_double(rows.back().ratio);
        o.expect(std::abs(r20 - 1.0) <= kGrowthTolerance, name + " ratio at l=20 is " + std::to_string(r20) + "; ");
        for (const auto& row : rows)
            if (row.l >= 4)
                o.expect(std::abs(as_double(row.ratio) - 1.0) <= std::pow(2.0, 2.0 - row.l / 2.0),
                         name + " decay bound at l=" + std::to_string(row.l) + "; ");
        o.detail << name << " |ratio-1| at l=20: " << std::abs(r20 - 1.0) << "  ";
    }
}

void serre(Outcome& o)
{
    std::size_t n = 0;
    for (const auto& name : builtin_scenario_names()) {
        const Scenario s = builtin(name);
        if (!s.torus.riemann_form())
            continue;
        const auto q = polarization_multiplier(s.endomorphism, s.torus);
        if (!q || *q <= 1)
            continue;
        const auto rep = serre_eigenvalue_check(s.endomorphism, *q, kSerreTolerance);
        o.expect(rep.passed && rep.max_residual <= kSerreTolerance,
                 name + " residual " + std::to_string(rep.max_residual) + "; ");
        ++n;
    }
    o.expect(n > 0, "no polarized builtins; ");
    o.detail << n << " polarized builtins, tolerance 1e-9";
}

void lefschetz(Outcome& o)
{
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = size(rng);
        const auto m = oracle::random_matrix(rng, n, n, -3, 3);
        o.expect(exterior_trace_sum(m) == oracle::alternating_minor_sum(m), "random " + m.to_string() + "; ");
    }
    std::size_t pairs = 0;
    for (const auto& name : builtin_scenario_names()) {
        const Scenario s = builtin(name);
        for (unsigned long l = 1; l <= 5; ++l) {
            const Integer L = lefschetz_number(s.endomorphism, l);
            if (L == 0)
                continue;
            o.expect(abs(L) == count_fixed(s.endomorphism, l), name + " l=" + std::to_string(l) + "; ");
            ++pairs;
        }
    }
    o.detail << "100 random matrices, " << pairs << " builtin iterates";
}

void pfaffians(Outcome& o)
{
    std::mt19937_64 rng(4242);
    for (std::size_t n : {4, 6}) {
        const auto S = IntegerMatrix::standard_symplectic(n / 2);
        const Integer pfS = pfaffian(S);
        o.expect(pfS * pfS == oracle::cofactor_det(S), "Pf(S)^2 != det(S); ");
        for (int trial = 0; trial < 100; ++trial) {
            const auto M = oracle::random_matrix(rng, n, n, -4, 4);
            const auto pulled = M.transpose() * S * M;
            const Integer lhs = pfaffian(pulled);
            o.expect(lhs == oracle::cofactor_det(M) * pfS, "pullback for " + M.to_string() + "; ");
            o.expect(lhs * lhs == oracle::cofactor_det(pulled), "Pf^2 != det for " + pulled.to_string() + "; ");
            if (n == 4)
                o.expect(lhs == pulled(0, 1) * pulled(2, 3) - pulled(0, 2) * pulled(1, 3) + pulled(0, 3) * pulled(1, 2),
                         "closed form 4x4 " + pulled.to_string() + "; ");
        }
    }
    o.detail << "Pf(M^t S M) = det(M) Pf(S) on 100 random M each of size 4 and 6";
}

void polarization(Outcome& o)
{
    const Scenario sd = builtin("silverman-sumdiff");
    const auto q = polarization_multiplier(sd.endomorphism, sd.torus);
    o.expect(q && *q == 2, "sumdiff q; ");
    o.expect(degree(sd.endomorphism) == 4, "sumdiff degree; ");

    const Scenario u = builtin("unpolarizable-1x4");
    o.expect(degree(u.endomorphism) == 16, "1x4 degree; ");
    o.expect(!polarization_multiplier(u.endomorphism, u.torus), "1x4 has a multiplier; ");

    for (long m : {2, 3, 4, 5})
        for (std::size_t g : {1, 2, 3}) {
            const auto f = LatticeEndomorphism::multiplication(2 * g, m);
            const auto qm = polarization_multiplier(f, ComplexTorus::standard(g));
            o.expect(qm && *qm == m * m, "[m] multiplier; ");
        }
    o.detail << "sumdiff q = " << (q ? q->get_str() : "none") << ", 1x4 degree "
             << degree(u.endomorphism).get_str() << " unpolarized, [m] gives m^2";
}

void bielliptic(Outcome& o)
{
    const Scenario s = builtin("bielliptic-quotient");
    const auto q = polarization_multiplier(s.endomorphism, s.torus);
    o.expect(validate_action(*s.action).valid(), "action invalid; ");
    for (unsigned long l = 1; l <= 2; ++l) {
        const auto b = quotient_fixed_lower_bound(s.endomorphism, *s.action, *q, l);
        const Integer expect = oracle::ipow(oracle::ipow(3, l) - 1, 4) / 2;
        o.expect(b.orbit_count == expect, "l=" + std::to_string(l) + " orbits " + b.orbit_count.get_str() + "; ");
        o.expect(b.bound_holds, "bound fails at l=" + std::to_string(l) + "; ");
        o.detail << "l=" << l << ": " << b.orbit_count.get_str() << " orbits  ";
    }
}

void dual_isogeny(Outcome& o)
{
    const auto gaussian = builtin("gaussian-cm").endomorphism.matrix();
    const auto ci = complementary_isogeny(LatticeEndomorphism(gaussian));
    o.expect(ci.m == 2, "gaussian m = " + ci.m.get_str() + "; ");
    o.expect(ci.dual.matrix() * gaussian == IntegerMatrix::scalar(2, 2) &&
                 gaussian * ci.dual.matrix() == IntegerMatrix::scalar(2, 2),
             "gaussian composition; ");
    std::mt19937_64 rng(77);
    int done = 0;
    for (std::size_t n : {2, 4})
        for (int trial = 0; trial < 50;) {
            const auto M = oracle::random_matrix(rng, n, n, -4, 4);
            const Integer d = oracle::cofactor_det(M);
            if (d == 0)
                continue;
            ++trial;
            // least m with m M^{-1} integral: |det| / gcd(det, cofactors)
            Integer gc = d;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<std::size_t> rows, cols;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (k != i)
                            rows.push_back(k);
                        if (k != j)
                            cols.push_back(k);
                    }
                    gc = gcd(gc, oracle::cofactor_det(M.submatrix(rows, cols)));
                }
            const Integer expect_m = abs(d) / gc;
            const auto c = complementary_isogeny(LatticeEndomorphism(M));
            const auto mI = IntegerMatrix::scalar(n, c.m);
            o.expect(c.m == expect_m, "m mismatch for " + M.to_string() + "; ");
            o.expect(c.dual.matrix() * M == mI && M * c.dual.matrix() == mI, "composition for " + M.to_string() + "; ");
            o.expect(oracle::ipow(c.m, n) == abs(d * oracle::cofactor_det(c.dual.matrix())),
                     "m^{2g} != deg * deg dual for " + M.to_string() + "; ");
            ++done;
        }
    o.detail << "gaussian m = " << ci.m.get_str() << ", " << done << " random isogenies";
}

void proddiv(Outcome& o)
{
    o.expect(expand_sum_power(2, 1) == 2, "(2,1); ");
    o.expect(expand_sum_power(3, 1) == 6, "(3,1); ");
    o.expect(expand_sum_power(2, 2) == 6, "(2,2); ");
    for (std::size_t r = 1; r <= 16; ++r)
        for (std::size_t n = 1; r * n <= kMaxExpansionDegree; ++n)
            o.expect(expand_sum_power(r, n) == oracle::multinomial_equal_parts(r, n),
                     "(" + std::to_string(r) + "," + std::to_string(n) + "); ");
    const auto c = proddiv_comparison(2, 2);
    o.detail << "(2,1)=2 (3,1)=6 (2,2)=" << c.expansion.get_str() << " [literal r!^n reading: " << c.literal.get_str()
             << "]";
}

void compare(Outcome& o)
{
    const Scenario s = builtin("mult-by-2");
    const auto a = compare_exact(s.endomorphism, s.factors, 5);
    const auto b = compare_exact(s.endomorphism, s.factors, 5);
    o.expect(a.rows.size() == 5, "row count; ");
    for (const auto& row : a.rows) {
        const Integer p = oracle::ipow(2, row.l);
        o.expect(row.exact_count && *row.exact_count == (p - 1) * (p - 1), "exact l=" + std::to_string(row.l) + "; ");
        o.expect(row.formula_value == p * p - 1, "formula l=" + std::to_string(row.l) + "; ");
        o.expect(row.difference && *row.difference == (p - 1) * (p - 1) - (p * p - 1),
                 "difference l=" + std::to_string(row.l) + "; ");
    }
    bool same = a.formula_label == b.formula_label && a.rows.size() == b.rows.size();
    for (std::size_t i = 0; same && i < a.rows.size(); ++i)
        same = a.rows[i].exact_count == b.rows[i].exact_count && a.rows[i].formula_value == b.rows[i].formula_value &&
               a.rows[i].difference == b.rows[i].difference && a.rows[i].note == b.rows[i].note;
    o.expect(same, "nondeterministic; ");

    RunOptions opts;
    opts.command = "compare";
    opts.scenario = "mult-by-2";
    opts.l_max = 5;
    o.expect(render_csv(run(opts, s)) == render_csv(run(opts, s)), "rendered output differs; ");
    o.detail << "l = 1..5, exact (2^l-1)^2 vs 4^l-1";
}

void subvariety(Outcome& o)
{
    const Scenario s = builtin("diagonal-subvariety");
    const auto& sub = *s.subvariety;
    for (unsigned long l = 1; l <= 20; ++l) {
        const Integer c = periodic_subvariety_count(s.endomorphism, sub.basis, sub.translate, sub.period, l);
        const Integer p = oracle::ipow(2, l);
        o.expect(c == (p - 1) * (p - 1), "count at l=" + std::to_string(l) + "; ");
        if (l == 20) {
            const double r = as_double(Rational(c, p * p));
            o.expect(std::abs(r - 1.0) <= kGrowthTolerance, "ratio at l=20; ");
            o.detail << "counts (2^l-1)^2 for l <= 20, |ratio-1| at l=20: " << std::abs(r - 1.0);
        }
    }
}
/*}}}*/

} // namespace

int main()
{
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"torsion law for [m]", torsion_law},
        {"three counting paths agree", triple_path},
        {"growth ratio tends to 1", growth},
        {"eigenvalues on the circle |z|^2 = q", serre},
        {"Lefschetz number", lefschetz},
        {"pullback degree via Pfaffian", pfaffians},
        {"polarization multiplier", polarization},
        {"bielliptic quotient orbits", bielliptic},
        {"complementary isogeny", dual_isogeny},
        {"product of divisors coefficient", proddiv},
        {"compare against product formula", compare},
        {"periodic subvariety", subvariety},
    };
    int failures = 0;
    int k = 0;
    for (const auto& [name, fn] : criteria) {
        ++k;
        Outcome o;
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "exception: " << e.what();
        }
        std::printf("%s %2d %-38s %s\n", o.ok ? "PASS" : "FAIL", k, name, o.detail.str().c_str());
        failures += !o.ok;
    }
    std::printf("%d/%d criteria passed\n", k - failures, k);
    return failures ? 1 : 0;
}
