#include "avdyn/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "avdyn/errors.hpp"
#include "avdyn/intersect_sym.hpp"

namespace avdyn {

namespace {

std::string ratio_str(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

std::string double_str(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string complex_str(const std::complex<double>& z)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<unsigned long> iterates(const RunOptions& o, unsigned long default_max)
{
    if (o.l && o.l_max)
        throw ValidationError("--l and --lmax are mutually exclusive");
    if (o.l) {
        if (*o.l == 0)
            throw ValidationError("--l must be >= 1");
        return {*o.l};
    }
    const unsigned long hi = o.l_max.value_or(default_max);
    if (hi == 0)
        throw ValidationError("--lmax must be >= 1");
    std::vector<unsigned long> ls;
    for (unsigned long l = 1; l <= hi; ++l)
        ls.push_back(l);
    return ls;
}

Integer require_multiplier(const Scenario& s, const char* command)
{
    if (!s.torus.riemann_form())
        throw ValidationError(std::string(command) + ": scenario '" + s.name + "' has no Riemann form");
    auto q = polarization_multiplier(s.endomorphism, s.torus);
    if (!q || *q <= 1)
        throw ValidationError(std::string(command) + ": scenario '" + s.name +
                              "' is not polarized (no q > 1 with M^t S M = q S)");
    return *q;
}

/*{{{ subcommands */
Report cmd_count(const RunOptions& o, const Scenario& s, Report r)
{
    Table t{"fixed points of f^l", {"l", "fixed_points"}, {}};
    for (unsigned long l : iterates(o, 1))
        t.rows.push_back({std::to_string(l), count_fixed(s.endomorphism, l).get_str()});
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_enumerate(const RunOptions& o, const Scenario& s, Report r)
{
    const unsigned long l = o.l.value_or(1);
    if (o.l_max)
        throw ValidationError("enumerate: use --l");
    const auto pts = enumerate_fixed(s.endomorphism, l, o.budget);
    Table t{"fixed points of f^" + std::to_string(l), {"index", "point"}, {}};
    for (std::size_t i = 0; i < pts.size(); ++i)
        t.rows.push_back({std::to_string(i), pts[i].to_string()});
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_growth(const RunOptions& o, const Scenario& s, Report r)
{
    if (o.l)
        throw ValidationError("growth: use --lmax");
    const Integer q = require_multiplier(s, "growth");
    const auto rows = growth_table(s.endomorphism, q, s.torus.half_dimension(), o.l_max.value_or(10));
    Table t{"growth against q^{gl}, q = " + q.get_str() + ", g = " + std::to_string(s.torus.half_dimension()),
            {"l", "exact_count", "asymptote", "ratio"},
            {}};
    for (const auto& row : rows)
        t.rows.push_back({std::to_string(row.l), row.exact_count.get_str(), row.asymptote.get_str(),
                          ratio_str(row.ratio)});
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_compare(const RunOptions& o, const Scenario& s, Report r)
{
    if (s.factors.empty())
        throw ValidationError("compare: scenario '" + s.name + "' lists no simple factors");
    if (o.l)
        throw ValidationError("compare: use --lmax");
    const auto report = compare_exact(s.endomorphism, s.factors, o.l_max.value_or(5));
    Table t{"exact count vs " + report.formula_label, {"l", "exact_count", "formula_value", "difference", "note"}, {}};
    for (const auto& row : report.rows) {
        t.rows.push_back({std::to_string(row.l), row.exact_count ? row.exact_count->get_str() : "",
                          row.formula_value.get_str(), row.difference ? row.difference->get_str() : "", row.note});
        if (!row.exact_count)
            r.warnings.push_back("compare: l = " + std::to_string(row.l) + " is degenerate");
    }
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_quotient(const RunOptions& o, const Scenario& s, Report r)
{
    if (!s.action)
        throw ValidationError("quotient: scenario '" + s.name + "' has no group action");
    const Integer q = require_multiplier(s, "quotient");
    Table t{"orbit count of Fix(f^l) under G, |G| = " + std::to_string(s.action->order()),
            {"l", "upstairs_count", "orbit_count", "bound", "bound_holds", "literal_bound", "literal_bound_holds"},
            {}};
    for (unsigned long l : iterates(o, 1)) {
        const auto b = quotient_fixed_lower_bound(s.endomorphism, *s.action, q, l, o.budget);
        t.rows.push_back({std::to_string(l), b.upstairs_count.get_str(), b.orbit_count.get_str(), ratio_str(b.bound),
                          yes_no(b.bound_holds), ratio_str(b.literal_bound), yes_no(b.literal_bound_holds)});
        if (!b.bound_holds)
            r.warnings.push_back("quotient: orbit count below upstairs/|G| at l = " + std::to_string(l));
    }
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_subvariety(const RunOptions& o, const Scenario& s, Report r)
{
    if (!s.subvariety)
        throw ValidationError("subvariety: scenario '" + s.name + "' has no subvariety");
    const auto& sub = *s.subvariety;
    const std::size_t rdim = sub.basis.cols() / 2;
    // Multiplier of f^m on the subtorus, from the restricted Riemann form.
    std::optional<Integer> q;
    if (s.torus.riemann_form()) {
        const ComplexTorus subtorus = restrict_torus(s.torus, sub.basis);
        const auto fm = power(s.endomorphism, sub.period);
        const auto restricted = restrict_to_sublattice(LatticeEndomorphism(fm.matrix()), sub.basis);
        q = polarization_multiplier(restricted, subtorus);
        if (q && *q <= 1)
            q.reset();
    }
    if (!q)
        r.warnings.push_back("subvariety: restriction is not polarized; asymptote column omitted");
    Table t{"fixed points of f^{ml} on Y = V + " + sub.translate.to_string() + ", m = " + std::to_string(sub.period) +
                ", dim V = " + std::to_string(rdim),
            {"l", "count", "asymptote", "ratio"},
            {}};
    for (unsigned long l : iterates(o, 10)) {
        const Integer c = periodic_subvariety_count(s.endomorphism, sub.basis, sub.translate, sub.period, l);
        std::string asym, ratio;
        if (q) {
            Integer a;
            mpz_pow_ui(a.get_mpz_t(), q->get_mpz_t(), rdim * l);
            Rational rr(c, a);
            rr.canonicalize();
            asym = a.get_str();
            ratio = ratio_str(rr);
        }
        t.rows.push_back({std::to_string(l), c.get_str(), asym, ratio});
    }
    r.tables.push_back(std::move(t));
    return r;
}

void verify_polarization(const Scenario& s, Report& r)
{
    Table t{"polarization", {"quantity", "value"}, {}};
    t.rows.push_back({"degree", degree(s.endomorphism).get_str()});
    if (s.torus.riemann_form()) {
        const auto q = polarization_multiplier(s.endomorphism, s.torus);
        t.rows.push_back({"q", q ? q->get_str() : "none"});
        t.rows.push_back({"polarized", yes_no(q && *q > 1)});
        if (q) {
            Integer qg;
            mpz_pow_ui(qg.get_mpz_t(), q->get_mpz_t(), s.torus.half_dimension());
            t.rows.push_back({"degree == q^g", yes_no(qg == degree(s.endomorphism))});
        }
    } else {
        t.rows.push_back({"q", "no Riemann form"});
    }
    if (s.torus.complex_structure())
        t.rows.push_back({"holomorphic", yes_no(is_holomorphic(s.endomorphism, s.torus))});
    r.tables.push_back(std::move(t));
}

void verify_serre(const RunOptions& o, const Scenario& s, Report& r)
{
    std::optional<Integer> q;
    if (s.torus.riemann_form())
        q = polarization_multiplier(s.endomorphism, s.torus);
    if (!q || *q <= 1) {
        r.warnings.push_back("serre: skipped, scenario '" + s.name + "' is not polarized");
        return;
    }
    const auto rep = serre_eigenvalue_check(s.endomorphism, *q, o.tolerance);
    Table t{"eigenvalues of M against |lambda|^2 = q", {"quantity", "value"}, {}};
    t.rows.push_back({"q", q->get_str()});
    t.rows.push_back({"charpoly", rep.charpoly.to_string()});
    t.rows.push_back({"squarefree part", rep.squarefree_part.to_string()});
    for (std::size_t i = 0; i < rep.roots.size(); ++i)
        t.rows.push_back({"root " + std::to_string(i), complex_str(rep.roots[i])});
    t.rows.push_back({"converged", yes_no(rep.converged)});
    t.rows.push_back({"max residual", double_str(rep.max_residual)});
    t.rows.push_back({"tolerance", double_str(rep.tolerance)});
    t.rows.push_back({"result", pass_fail(rep.passed)});
    if (!rep.passed)
        r.warnings.push_back(rep.converged ? "serre: residual above tolerance" : "serre: root finder did not converge");
    r.tables.push_back(std::move(t));
}

void verify_lefschetz(const RunOptions& o, const Scenario& s, Report& r)
{
    Table t{"Lefschetz number det(I - M^l) vs fixed-point count", {"l", "lefschetz", "fixed_points", "agree"}, {}};
    for (unsigned long l : iterates(o, 5)) {
        const Integer L = lefschetz_number(s.endomorphism, l);
        if (L == 0) {
            t.rows.push_back({std::to_string(l), "0", "", "degenerate"});
            r.warnings.push_back("lefschetz: l = " + std::to_string(l) + " is degenerate");
            continue;
        }
        const Integer c = count_fixed(s.endomorphism, l);
        t.rows.push_back({std::to_string(l), L.get_str(), c.get_str(), yes_no(abs(L) == c)});
    }
    r.tables.push_back(std::move(t));
}

void verify_pfaffian(const Scenario& s, Report& r)
{
    const IntegerMatrix S = s.torus.riemann_form() ? *s.torus.riemann_form()
                                                   : IntegerMatrix::standard_symplectic(s.torus.half_dimension());
    const auto chk = pullback_degree_check(s.endomorphism.matrix(), S);
    r.tables.push_back({"pullback degree: Pf(M^t S M) vs det(M) Pf(S)",
                        {"quantity", "value"},
                        {{"Pf(M^t S M)", chk.lhs.get_str()},
                         {"det(M) Pf(S)", chk.rhs.get_str()},
                         {"result", pass_fail(chk.equal)}}});
    if (!chk.equal)
        r.warnings.push_back("pfaffian: pullback identity failed");
}

void verify_proddiv(Report& r)
{
    Table t{"coefficient of D_1^n...D_r^n in (F_1+...+F_r)^{rn}",
            {"r", "n", "expansion", "literal r!^n", "agree"},
            {}};
    const std::pair<std::size_t, std::size_t> cases[] = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {2, 2},
                                                         {3, 2}, {2, 3}, {4, 2}, {2, 4}};
    for (auto [rr, n] : cases) {
        const auto c = proddiv_comparison(rr, n);
        t.rows.push_back({std::to_string(rr), std::to_string(n), c.expansion.get_str(), c.literal.get_str(),
                          yes_no(c.agree)});
    }
    r.tables.push_back(std::move(t));
}

void verify_dual(const Scenario& s, Report& r)
{
    if (!s.endomorphism.is_translation_free() || degree(s.endomorphism) == 0) {
        r.warnings.push_back("dual-isogeny: skipped, endomorphism is not a translation-free isogeny");
        return;
    }
    const auto ci = complementary_isogeny(s.endomorphism);
    const IntegerMatrix& M = s.endomorphism.matrix();
    const IntegerMatrix& Md = ci.dual.matrix();
    const IntegerMatrix mI = IntegerMatrix::scalar(M.rows(), ci.m);
    Integer lhs;
    mpz_pow_ui(lhs.get_mpz_t(), ci.m.get_mpz_t(), M.rows());
    const bool ok = Md * M == mI && M * Md == mI && lhs == degree(s.endomorphism) * degree(ci.dual);
    r.tables.push_back({"complementary isogeny",
                        {"quantity", "value"},
                        {{"m", ci.m.get_str()},
                         {"dual matrix", Md.to_string()},
                         {"dual o f = [m]", yes_no(Md * M == mI)},
                         {"f o dual = [m]", yes_no(M * Md == mI)},
                         {"m^{2g} = deg f * deg dual", yes_no(lhs == degree(s.endomorphism) * degree(ci.dual))},
                         {"result", pass_fail(ok)}}});
    if (!ok)
        r.warnings.push_back("dual-isogeny: identity failed");
}

Report cmd_verify(const RunOptions& o, const Scenario& s, Report r)
{
    std::vector<std::string> targets = o.targets;
    if (targets.empty())
        throw ValidationError("verify: name at least one target or pass --all");
    if (std::find(targets.begin(), targets.end(), "all") != targets.end())
        targets = kVerifyTargets;
    for (const auto& target : targets) {
        if (target == "polarization")
            verify_polarization(s, r);
        else if (target == "serre")
            verify_serre(o, s, r);
        else if (target == "lefschetz")
            verify_lefschetz(o, s, r);
        else if (target == "pfaffian")
            verify_pfaffian(s, r);
        else if (target == "proddiv")
            verify_proddiv(r);
        else if (target == "dual-isogeny")
            verify_dual(s, r);
        else
            throw ValidationError("verify: unknown target '" + target + "'");
    }
    return r;
}
/*}}}*/

} // namespace

std::string render_table(const Report& report)
{
    std::ostringstream os;
    if (!report.command.empty())
        os << "# " << report.command << "\n";
    for (std::size_t k = 0; k < report.tables.size(); ++k) {
        const Table& t = report.tables[k];
        if (k)
            os << "\n";
        os << t.title << "\n";
        std::vector<std::size_t> width(t.header.size());
        for (std::size_t c = 0; c < t.header.size(); ++c)
            width[c] = t.header[c].size();
        for (const auto& row : t.rows)
            for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                os << "  " << cells[c];
                if (c + 1 < cells.size())
                    os << std::string(width[c] - cells[c].size(), ' ');
            }
            os << "\n";
        };
        line(t.header);
        std::vector<std::string> rule;
        for (auto w : width)
            rule.emplace_back(w, '-');
        line(rule);
        for (const auto& row : t.rows)
            line(row);
    }
    return os.str();
}

std::string render_csv(const Report& report)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < report.tables.size(); ++k) {
        const Table& t = report.tables[k];
        if (k)
            os << "\n";
        os << "# " << t.title << "\n";
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c)
                os << (c ? "," : "") << csv_field(cells[c]);
            os << "\n";
        };
        line(t.header);
        for (const auto& row : t.rows)
            line(row);
    }
    return os.str();
}

std::vector<Table> parse_csv(const std::string& text)
{
    std::vector<Table> tables;
    std::size_t pos = 0;
    bool want_header = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (text[pos] == '\n') {
            ++pos;
            continue;
        }
        if (text[pos] == '#') {
            if (eol == std::string::npos)
                eol = text.size();
            std::string title = text.substr(pos, eol - pos);
            tables.push_back({title.size() > 2 ? title.substr(2) : "", {}, {}});
            want_header = true;
            pos = eol + 1;
            continue;
        }
        // One record, honoring quoted fields that may contain commas or newlines.
        std::vector<std::string> cells;
        std::string cell;
        bool quoted = false;
        for (; pos < text.size(); ++pos) {
            const char c = text[pos];
            if (quoted) {
                if (c == '"' && pos + 1 < text.size() && text[pos + 1] == '"') {
                    cell += '"';
                    ++pos;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    cell += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                cells.push_back(std::move(cell));
                cell.clear();
            } else if (c == '\n') {
                ++pos;
                break;
            } else {
                cell += c;
            }
        }
        cells.push_back(std::move(cell));
        if (tables.empty())
            tables.push_back({});
        if (want_header) {
            tables.back().header = std::move(cells);
            want_header = false;
        } else {
            tables.back().rows.push_back(std::move(cells));
        }
    }
    return tables;
}

Report run(const RunOptions& options, const Scenario& scenario)
{
    Report r;
    r.command = options.command + " --scenario " + options.scenario;
    if (options.l)
        r.command += " --l " + std::to_string(*options.l);
    if (options.l_max)
        r.command += " --lmax " + std::to_string(*options.l_max);
    for (const auto& t : options.targets)
        r.command += " " + t;

    const std::string& c = options.command;
    if (c == "count")
        return cmd_count(options, scenario, std::move(r));
    if (c == "enumerate")
        return cmd_enumerate(options, scenario, std::move(r));
    if (c == "growth")
        return cmd_growth(options, scenario, std::move(r));
    if (c == "compare")
        return cmd_compare(options, scenario, std::move(r));
    if (c == "quotient")
        return cmd_quotient(options, scenario, std::move(r));
    if (c == "subvariety")
        return cmd_subvariety(options, scenario, std::move(r));
    if (c == "verify")
        return cmd_verify(options, scenario, std::move(r));
    throw ValidationError("unknown command '" + c + "'");
}

Report list_scenarios()
{
    Report r;
    r.command = "scenarios";
    Table t{"builtin scenarios (mult-by-<m>[-g<g>] accepts any m and g)", {"name", "g", "description"}, {}};
    for (const auto& name : builtin_scenario_names()) {
        const auto s = builtin_scenario(name);
        t.rows.push_back({name, std::to_string(s->torus.half_dimension()), s->description});
    }
    r.tables.push_back(std::move(t));
    return r;
}

} // namespace avdyn
