#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avdyn/fixpoint.hpp"
#include "avdyn/scenario.hpp"

namespace avdyn {

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const Table& o) const = default;
};

struct Report {
    std::string command;  // echo of the invocation
    std::vector<Table> tables;
    std::vector<std::string> warnings;
};

enum class OutputFormat { Table, Csv };

std::string render_table(const Report& report);
// Each table: "# <title>" line, header row, data rows; tables separated by a blank line.
std::string render_csv(const Report& report);
std::vector<Table> parse_csv(const std::string& text);

struct RunOptions {
    std::string command;
    std::string scenario;
    std::optional<unsigned long> l;
    std::optional<unsigned long> l_max;
    unsigned long long budget = kDefaultBudget;
    double tolerance = kDefaultSerreTolerance;
    std::vector<std::string> targets;  // verify targets; "all" expands to every target
};

inline const std::vector<std::string> kVerifyTargets{"polarization", "serre",   "lefschetz",
                                                     "pfaffian",     "proddiv", "dual-isogeny"};

// Dispatches one subcommand. Errors propagate as ValidationError / DegenerateError / BudgetError.
Report run(const RunOptions& options, const Scenario& scenario);
Report list_scenarios();

} // namespace avdyn
