#pragma once

// Scenario files: JSON descriptions of a torus, an endomorphism and optional extras.
//
// Matrices are row-major arrays of integer strings (big integers survive any JSON reader),
// rationals are "p/q" strings. See docs/scenarios.md for the annotated schema.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "avdyn/lattice_av.hpp"
#include "avdyn/quotient_dyn.hpp"

namespace avdyn {

struct SubvarietySpec {
    IntegerMatrix basis;  // 2g x 2r, columns span the subtorus V
    TorsionPoint translate;
    unsigned long period = 1;

    bool operator==(const SubvarietySpec& o) const = default;
};

struct Scenario {
    std::string name;
    std::string description;
    ComplexTorus torus;
    LatticeEndomorphism endomorphism;
    bool analytic = false;  // when true and J is present, M J = J M is enforced
    std::vector<SimpleFactorSpec> factors;
    std::optional<GroupAction> action;
    std::optional<SubvarietySpec> subvariety;

    bool operator==(const Scenario& o) const;
};

// Re-validates every invariant; throws ValidationError naming the offending field.
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);

// Builtins are addressed by name; "mult-by-<m>" and "mult-by-<m>-g<g>" are parametric.
std::vector<std::string> builtin_scenario_names();
std::optional<Scenario> builtin_scenario(const std::string& name);

// A builtin name, or a path to a JSON scenario file.
Scenario load_scenario(const std::string& name_or_path);

Integer parse_integer(const nlohmann::json& j, const std::string& field);
Rational parse_rational(const nlohmann::json& j, const std::string& field);

} // namespace avdyn
