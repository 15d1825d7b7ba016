#include "avdyn/scenario.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "avdyn/errors.hpp"

namespace avdyn {

using nlohmann::json;

namespace {

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const json& require(const json& j, const char* key, const std::string& field)
{
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(field + "." + key + ": missing required field");
    return j.at(key);
}

std::size_t parse_count(const json& j, const std::string& field)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw ValidationError(field + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

IntegerMatrix parse_integer_matrix(const json& j, const std::string& field)
{
    if (!j.is_array() || j.empty())
        throw ValidationError(field + ": expected a nonempty array of rows");
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array())
            throw ValidationError(at(field, i) + ": expected an array");
        std::vector<Integer> row;
        for (std::size_t k = 0; k < j[i].size(); ++k)
            row.push_back(parse_integer(j[i][k], at(at(field, i), k)));
        rows.push_back(std::move(row));
    }
    try {
        return IntegerMatrix::from_rows(rows);
    } catch (const ValidationError& e) {
        throw ValidationError(field + ": " + e.what());
    }
}

RationalMatrix parse_rational_matrix(const json& j, const std::string& field)
{
    if (!j.is_array() || j.empty())
        throw ValidationError(field + ": expected a nonempty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array())
            throw ValidationError(at(field, i) + ": expected an array");
        std::vector<Rational> row;
        for (std::size_t k = 0; k < j[i].size(); ++k)
            row.push_back(parse_rational(j[i][k], at(at(field, i), k)));
        rows.push_back(std::move(row));
    }
    try {
        return RationalMatrix::from_rows(rows);
    } catch (const ValidationError& e) {
        throw ValidationError(field + ": " + e.what());
    }
}

RationalVector parse_rational_vector(const json& j, const std::string& field)
{
    if (!j.is_array())
        throw ValidationError(field + ": expected an array");
    RationalVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(parse_rational(j[i], at(field, i)));
    return v;
}

json matrix_json(const IntegerMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(m(i, k).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_json(const RationalMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(m(i, k).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_json(const RationalVector& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(x.get_str());
    return out;
}

template <class F>
auto with_field(const std::string& field, F&& make)
{
    try {
        return make();
    } catch (const ValidationError& e) {
        throw ValidationError(field + ": " + e.what());
    }
}

} // namespace

Integer parse_integer(const json& j, const std::string& field)
{
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<unsigned long long>()));
    if (!j.is_string())
        throw ValidationError(field + ": expected an integer string");
    static const std::regex re("[+-]?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, re))
        throw ValidationError(field + ": '" + s + "' is not an integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

Rational parse_rational(const json& j, const std::string& field)
{
    if (j.is_number_integer() || j.is_number_unsigned())
        return Rational(parse_integer(j, field));
    if (!j.is_string())
        throw ValidationError(field + ": expected a rational string \"p/q\"");
    static const std::regex re("([+-]?[0-9]+)(?:/([0-9]+))?");
    std::smatch m;
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, m, re))
        throw ValidationError(field + ": '" + s + "' is not a rational p/q");
    std::string num = m[1].str();
    if (num[0] == '+')
        num = num.substr(1);
    Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
    if (den == 0)
        throw ValidationError(field + ": zero denominator");
    Rational r(Integer(num), den);
    r.canonicalize();
    return r;
}

bool Scenario::operator==(const Scenario& o) const
{
    if (action.has_value() != o.action.has_value())
        return false;
    if (action && action->elements != o.action->elements)
        return false;
    return name == o.name && description == o.description && torus == o.torus && endomorphism == o.endomorphism &&
           analytic == o.analytic && factors == o.factors && subvariety == o.subvariety;
}

Scenario scenario_from_json(const json& j)
{
    if (!j.is_object())
        throw ValidationError("scenario: expected a JSON object");
    const json& name = require(j, "name", "scenario");
    if (!name.is_string())
        throw ValidationError("scenario.name: expected a string");
    std::string description;
    if (j.contains("description")) {
        if (!j["description"].is_string())
            throw ValidationError("scenario.description: expected a string");
        description = j["description"].get<std::string>();
    }

    const json& tj = require(j, "torus", "scenario");
    const std::size_t g = parse_count(require(tj, "g", "torus"), "torus.g");
    std::optional<RationalMatrix> J;
    std::optional<IntegerMatrix> S;
    if (tj.contains("complex_structure") && !tj["complex_structure"].is_null())
        J = parse_rational_matrix(tj["complex_structure"], "torus.complex_structure");
    if (tj.contains("riemann_form") && !tj["riemann_form"].is_null())
        S = parse_integer_matrix(tj["riemann_form"], "torus.riemann_form");
    ComplexTorus torus = with_field("torus", [&] { return ComplexTorus(g, J, S); });

    const json& ej = require(j, "endomorphism", "scenario");
    IntegerMatrix M = parse_integer_matrix(require(ej, "matrix", "endomorphism"), "endomorphism.matrix");
    RationalVector t(M.rows());
    if (ej.contains("translation"))
        t = parse_rational_vector(ej["translation"], "endomorphism.translation");
    LatticeEndomorphism f = with_field("endomorphism", [&] { return LatticeEndomorphism(M, t); });
    if (f.rank() != torus.rank())
        throw ValidationError("endomorphism.matrix: size " + std::to_string(f.rank()) +
                              " does not match torus rank " + std::to_string(torus.rank()));
    bool analytic = false;
    if (ej.contains("analytic")) {
        if (!ej["analytic"].is_boolean())
            throw ValidationError("endomorphism.analytic: expected a boolean");
        analytic = ej["analytic"].get<bool>();
    }
    if (analytic && !is_holomorphic(f, torus))
        throw ValidationError("endomorphism.analytic: matrix does not commute with the complex structure");

    std::vector<SimpleFactorSpec> factors;
    if (j.contains("factors")) {
        const json& fj = j["factors"];
        if (!fj.is_array())
            throw ValidationError("factors: expected an array");
        for (std::size_t i = 0; i < fj.size(); ++i) {
            const std::string field = at("factors", i);
            const std::size_t fg = parse_count(require(fj[i], "g", field), field + ".g");
            const Integer q = parse_integer(require(fj[i], "q", field), field + ".q");
            std::size_t r = 1;
            if (fj[i].contains("multiplicity"))
                r = parse_count(fj[i]["multiplicity"], field + ".multiplicity");
            factors.push_back(with_field(field, [&] { return SimpleFactorSpec(fg, q, r); }));
        }
    }

    std::optional<GroupAction> action;
    if (j.contains("action") && !j["action"].is_null()) {
        const json& aj = j["action"];
        if (!aj.is_array())
            throw ValidationError("action: expected an array of elements");
        GroupAction ga;
        for (std::size_t i = 0; i < aj.size(); ++i) {
            const std::string field = at("action", i);
            IntegerMatrix U = parse_integer_matrix(require(aj[i], "linear", field), field + ".linear");
            RationalVector s(U.rows());
            if (aj[i].contains("translation"))
                s = parse_rational_vector(aj[i]["translation"], field + ".translation");
            if (U.rows() != torus.rank())
                throw ValidationError(field + ".linear: size does not match torus rank");
            ga.elements.push_back(with_field(field, [&] { return AffineAutomorphism(U, s); }));
        }
        action = std::move(ga);
    }

    std::optional<SubvarietySpec> sub;
    if (j.contains("subvariety") && !j["subvariety"].is_null()) {
        const json& sj = j["subvariety"];
        IntegerMatrix B = parse_integer_matrix(require(sj, "basis", "subvariety"), "subvariety.basis");
        if (B.rows() != torus.rank())
            throw ValidationError("subvariety.basis: row count does not match torus rank");
        with_field("subvariety.basis", [&] {
            require_saturated(B);
            return 0;
        });
        RationalVector Q(torus.rank());
        if (sj.contains("translate"))
            Q = parse_rational_vector(sj["translate"], "subvariety.translate");
        if (Q.size() != torus.rank())
            throw ValidationError("subvariety.translate: length does not match torus rank");
        unsigned long period = 1;
        if (sj.contains("period"))
            period = parse_count(sj["period"], "subvariety.period");
        if (period == 0)
            throw ValidationError("subvariety.period: must be >= 1");
        sub = SubvarietySpec{B, TorsionPoint(Q), period};
    }

    return Scenario{name.get<std::string>(), description, torus, f, analytic, factors, action, sub};
}

json scenario_to_json(const Scenario& s)
{
    json j;
    j["name"] = s.name;
    if (!s.description.empty())
        j["description"] = s.description;
    json tj;
    tj["g"] = s.torus.half_dimension();
    if (s.torus.complex_structure())
        tj["complex_structure"] = matrix_json(*s.torus.complex_structure());
    if (s.torus.riemann_form())
        tj["riemann_form"] = matrix_json(*s.torus.riemann_form());
    j["torus"] = tj;
    j["endomorphism"] = {{"matrix", matrix_json(s.endomorphism.matrix())},
                         {"translation", vector_json(s.endomorphism.translation())},
                         {"analytic", s.analytic}};
    if (!s.factors.empty()) {
        json fj = json::array();
        for (const auto& f : s.factors)
            fj.push_back({{"g", f.g}, {"q", f.q.get_str()}, {"multiplicity", f.multiplicity}});
        j["factors"] = fj;
    }
    if (s.action) {
        json aj = json::array();
        for (const auto& e : s.action->elements)
            aj.push_back({{"linear", matrix_json(e.linear())}, {"translation", vector_json(e.translation())}});
        j["action"] = aj;
    }
    if (s.subvariety)
        j["subvariety"] = {{"basis", matrix_json(s.subvariety->basis)},
                           {"translate", vector_json(s.subvariety->translate.coordinates())},
                           {"period", s.subvariety->period}};
    return j;
}

namespace {

Scenario mult_by(long m, std::size_t g)
{
    const ComplexTorus torus = ComplexTorus::standard(g);
    Scenario s{"mult-by-" + std::to_string(m) + (g == 1 ? "" : "-g" + std::to_string(g)),
               "multiplication by " + std::to_string(m) +
                   (g == 1 ? " on E = C/Z[i]" : " on a product of " + std::to_string(g) + " copies of E = C/Z[i]"),
               torus,
               LatticeEndomorphism::multiplication(2 * g, m),
               true,
               {},
               std::nullopt,
               std::nullopt};
    if (m * m >= 2)
        s.factors.emplace_back(1, Integer(m * m), g);
    return s;
}

Scenario gaussian_cm()
{
    return Scenario{"gaussian-cm",
                    "complex multiplication by 1+i on E = C/Z[i]",
                    ComplexTorus::standard(1),
                    LatticeEndomorphism(IntegerMatrix{{1, -1}, {1, 1}}),
                    true,
                    {SimpleFactorSpec(1, 2, 1)},
                    std::nullopt,
                    std::nullopt};
}

Scenario silverman_sumdiff()
{
    return Scenario{"silverman-sumdiff",
                    "(x,y) -> (x+y, x-y) on E x E; lattice degree 4 = 2^{dim(E x E)}, i.e. 2^{2 dim E}",
                    ComplexTorus::standard(2),
                    LatticeEndomorphism(IntegerMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}}),
                    true,
                    {SimpleFactorSpec(1, 2, 2)},
                    std::nullopt,
                    std::nullopt};
}

Scenario unpolarizable()
{
    return Scenario{"unpolarizable-1x4",
                    "[1] x [4] on A x E with A of dimension 2; degree 16, fixes A pointwise",
                    ComplexTorus::standard(3),
                    LatticeEndomorphism(IntegerMatrix::diagonal({1, 1, 1, 1, 4, 4})),
                    true,
                    {},
                    std::nullopt,
                    std::nullopt};
}

Scenario bielliptic()
{
    GroupAction action;
    action.elements.emplace_back(IntegerMatrix::identity(4), RationalVector(4));
    action.elements.emplace_back(IntegerMatrix::diagonal({1, 1, -1, -1}),
                                 RationalVector{Rational(1, 2), Rational(0), Rational(0), Rational(0)});
    return Scenario{"bielliptic-quotient",
                    "psi = [3] on E x E with the free order-2 action (x, y) -> (x + 1/2, -y)",
                    ComplexTorus::standard(2),
                    LatticeEndomorphism::multiplication(4, 3),
                    true,
                    {SimpleFactorSpec(1, 9, 2)},
                    action,
                    std::nullopt};
}

Scenario diagonal_subvariety()
{
    return Scenario{"diagonal-subvariety",
                    "[2] x [2] on E x E restricted to the diagonal copy of E",
                    ComplexTorus::standard(2),
                    LatticeEndomorphism::multiplication(4, 2),
                    true,
                    {SimpleFactorSpec(1, 4, 2)},
                    std::nullopt,
                    SubvarietySpec{IntegerMatrix{{1, 0}, {0, 1}, {1, 0}, {0, 1}}, TorsionPoint(RationalVector(4)), 1}};
}

} // namespace

std::vector<std::string> builtin_scenario_names()
{
    return {"mult-by-2",         "mult-by-3",         "mult-by-4",          "mult-by-2-g2",
            "mult-by-3-g2",      "gaussian-cm",       "silverman-sumdiff",  "unpolarizable-1x4",
            "bielliptic-quotient", "diagonal-subvariety"};
}

std::optional<Scenario> builtin_scenario(const std::string& name)
{
    static const std::regex mult("mult-by-(-?[0-9]{1,4})(?:-g([0-9]{1,2}))?");
    std::smatch m;
    if (std::regex_match(name, m, mult)) {
        const long k = std::stol(m[1].str());
        const std::size_t g = m[2].matched ? std::stoul(m[2].str()) : 1;
        if (g == 0)
            throw ValidationError("scenario " + name + ": g must be >= 1");
        return mult_by(k, g);
    }
    if (name == "gaussian-cm")
        return gaussian_cm();
    if (name == "silverman-sumdiff")
        return silverman_sumdiff();
    if (name == "unpolarizable-1x4")
        return unpolarizable();
    if (name == "bielliptic-quotient")
        return bielliptic();
    if (name == "diagonal-subvariety")
        return diagonal_subvariety();
    return std::nullopt;
}

Scenario load_scenario(const std::string& name_or_path)
{
    if (auto s = builtin_scenario(name_or_path))
        return *s;
    std::ifstream in(name_or_path);
    if (!in)
        throw ValidationError("scenario '" + name_or_path + "': not a builtin name and not a readable file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("scenario '" + name_or_path + "': invalid JSON: " + e.what());
    }
    return scenario_from_json(j);
}

} // namespace avdyn
