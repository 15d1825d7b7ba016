// Python bindings. Integers cross the boundary as Python ints and rationals as
// fractions.Fraction, both via their decimal strings, so nothing is ever rounded.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "avdyn/errors.hpp"
#include "avdyn/fixpoint.hpp"
#include "avdyn/intersect_sym.hpp"
#include "avdyn/quotient_dyn.hpp"
#include "avdyn/report.hpp"
#include "avdyn/scenario.hpp"

namespace py = pybind11;
using namespace avdyn;

namespace {

py::object to_py(const Integer& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

py::object to_py(const Rational& x) { return py::module_::import("fractions").attr("Fraction")(x.get_str()); }

Integer to_integer(const py::handle& h)
{
    if (!py::isinstance<py::int_>(h))
        throw ValidationError("expected an int, got " + std::string(py::str(py::type::handle_of(h))));
    return Integer(std::string(py::str(h)));
}

Rational to_rational(const py::handle& h)
{
    if (py::isinstance<py::int_>(h))
        return Rational(to_integer(h));
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    if (!py::isinstance(h, fraction))
        throw ValidationError("expected an int or Fraction, got " + std::string(py::str(py::type::handle_of(h))));
    Rational r(to_integer(h.attr("numerator")), to_integer(h.attr("denominator")));
    r.canonicalize();
    return r;
}

IntegerMatrix to_matrix(const py::sequence& rows)
{
    std::vector<std::vector<Integer>> out;
    for (const auto& row : rows) {
        std::vector<Integer> r;
        for (const auto& x : py::reinterpret_borrow<py::sequence>(row))
            r.push_back(to_integer(x));
        out.push_back(std::move(r));
    }
    return IntegerMatrix::from_rows(out);
}

RationalVector to_vector(const std::optional<py::sequence>& v, std::size_t n)
{
    RationalVector out(n);
    if (!v)
        return out;
    if (py::len(*v) != n)
        throw ValidationError("translation has length " + std::to_string(py::len(*v)) + ", expected " +
                              std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        out[i] = to_rational((*v)[i]);
    return out;
}

py::list to_py(const IntegerMatrix& m)
{
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.append(to_py(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::tuple to_py(const TorsionPoint& p)
{
    py::tuple t(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        t[i] = to_py(p.coordinates()[i]);
    return t;
}

LatticeEndomorphism endomorphism(const py::sequence& matrix, const std::optional<py::sequence>& translation)
{
    IntegerMatrix M = to_matrix(matrix);
    RationalVector t = to_vector(translation, M.rows());
    return LatticeEndomorphism(std::move(M), std::move(t));
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json py_to_json(const py::object& o)
{
    return nlohmann::json::parse(std::string(py::str(py::module_::import("json").attr("dumps")(o))));
}

Scenario resolve(const py::object& scenario)
{
    if (py::isinstance<py::str>(scenario))
        return load_scenario(scenario.cast<std::string>());
    return scenario_from_json(py_to_json(scenario));
}

py::dict report_to_py(const Report& r)
{
    py::list tables;
    for (const auto& t : r.tables) {
        py::dict d;
        d["title"] = t.title;
        d["header"] = t.header;
        d["rows"] = t.rows;
        tables.append(d);
    }
    py::dict out;
    out["command"] = r.command;
    out["tables"] = tables;
    out["warnings"] = r.warnings;
    return out;
}

} // namespace

PYBIND11_MODULE(_avdyn, m)
{
    m.doc() = "Exact fixed-point counting for endomorphisms of lattice tori";

    static py::exception<ValidationError> validation(m, "ValidationError", PyExc_ValueError);
    static py::exception<DegenerateError> degenerate(m, "DegenerateError", PyExc_ArithmeticError);
    static py::exception<BudgetError> budget(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            py::set_error(validation, e.what());
        } catch (const DegenerateError& e) {
            py::set_error(degenerate, e.what());
        } catch (const BudgetError& e) {
            py::set_error(budget, e.what());
        }
    });

    m.def("det", [](const py::sequence& a) { return to_py(det(to_matrix(a))); });
    m.def("pfaffian", [](const py::sequence& a) { return to_py(pfaffian(to_matrix(a))); });
    m.def("exterior_trace_sum", [](const py::sequence& a) { return to_py(exterior_trace_sum(to_matrix(a))); });
    m.def("charpoly", [](const py::sequence& a) {
        py::list c;
        const IntegerPolynomial p = charpoly(to_matrix(a));
        for (const auto& x : p.coefficients())
            c.append(to_py(x));
        return c;
    }, "coefficients in ascending degree");
    m.def("smith_normal_form", [](const py::sequence& a) {
        const auto s = smith_normal_form(to_matrix(a));
        py::list divisors;
        for (const auto& d : s.elementary_divisors)
            divisors.append(to_py(d));
        py::dict d;
        d["U"] = to_py(s.U);
        d["D"] = to_py(s.D);
        d["V"] = to_py(s.V);
        d["elementary_divisors"] = divisors;
        return d;
    });

    m.def("count_fixed", [](const py::sequence& a, unsigned long l, std::optional<py::sequence> t) {
        return to_py(count_fixed(endomorphism(a, t), l));
    }, py::arg("matrix"), py::arg("l"), py::arg("translation") = py::none());
    m.def("enumerate_fixed", [](const py::sequence& a, unsigned long l, std::optional<py::sequence> t,
                                unsigned long long cap) {
        py::list out;
        for (const auto& p : enumerate_fixed(endomorphism(a, t), l, cap))
            out.append(to_py(p));
        return out;
    }, py::arg("matrix"), py::arg("l"), py::arg("translation") = py::none(), py::arg("budget") = kDefaultBudget);
    m.def("brute_force_count", [](const py::sequence& a, unsigned long l, std::optional<py::sequence> t,
                                  unsigned long long cap) {
        return to_py(brute_force_count(endomorphism(a, t), l, cap));
    }, py::arg("matrix"), py::arg("l"), py::arg("translation") = py::none(), py::arg("budget") = kDefaultBudget);
    m.def("lefschetz_number", [](const py::sequence& a, unsigned long l) {
        return to_py(lefschetz_number(LatticeEndomorphism(to_matrix(a)), l));
    }, py::arg("matrix"), py::arg("l"));
    m.def("growth_table", [](const py::sequence& a, const py::int_& q, unsigned long l_max) {
        const LatticeEndomorphism f(to_matrix(a));
        py::list rows;
        for (const auto& r : growth_table(f, to_integer(q), f.rank() / 2, l_max)) {
            py::dict d;
            d["l"] = r.l;
            d["exact_count"] = to_py(r.exact_count);
            d["asymptote"] = to_py(r.asymptote);
            d["ratio"] = to_py(r.ratio);
            rows.append(d);
        }
        return rows;
    }, py::arg("matrix"), py::arg("q"), py::arg("l_max"));

    m.def("degree", [](const py::sequence& a) { return to_py(degree(LatticeEndomorphism(to_matrix(a)))); });
    m.def("polarization_multiplier", [](const py::sequence& a, std::optional<py::sequence> s) -> py::object {
        const LatticeEndomorphism f(to_matrix(a));
        const ComplexTorus torus = s ? ComplexTorus(f.rank() / 2, std::nullopt, to_matrix(*s))
                                     : ComplexTorus::standard(f.rank() / 2);
        const auto q = polarization_multiplier(f, torus);
        return q ? to_py(*q) : py::none();
    }, py::arg("matrix"), py::arg("riemann_form") = py::none(),
       "q with M^t S M = q S, or None; S defaults to the standard symplectic form");
    m.def("complementary_isogeny", [](const py::sequence& a) {
        const auto c = complementary_isogeny(LatticeEndomorphism(to_matrix(a)));
        return py::make_tuple(to_py(c.dual.matrix()), to_py(c.m));
    }, "(dual matrix, m) with dual * M = M * dual = m I");

    m.def("expand_sum_power", [](std::size_t r, std::size_t n) { return to_py(expand_sum_power(r, n)); });

    m.def("builtin_scenarios", &builtin_scenario_names);
    m.def("scenario", [](const py::object& s) { return json_to_py(scenario_to_json(resolve(s))); },
          "a builtin name, a file path, or a scenario dict; returns the validated scenario as a dict");
    m.def("run", [](const std::string& command, const py::object& scenario, std::optional<unsigned long> l,
                    std::optional<unsigned long> l_max, std::vector<std::string> targets,
                    unsigned long long cap) {
        const Scenario s = resolve(scenario);
        RunOptions o;
        o.command = command;
        o.scenario = s.name;
        o.l = l;
        o.l_max = l_max;
        o.targets = std::move(targets);
        o.budget = cap;
        return report_to_py(run(o, s));
    }, py::arg("command"), py::arg("scenario"), py::arg("l") = py::none(), py::arg("l_max") = py::none(),
       py::arg("targets") = std::vector<std::string>{}, py::arg("budget") = kDefaultBudget);
}
