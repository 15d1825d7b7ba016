// avdyn: fixed-point counts and related checks for endomorphisms of lattice tori.
//
// Exit status: 0 success, 1 validation error, 2 degenerate input or budget refusal.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "avdyn/errors.hpp"
#include "avdyn/report.hpp"
#include "avdyn/scenario.hpp"

namespace {

struct Flags {
    std::string scenario;
    unsigned long l = 0;
    unsigned long lmax = 0;
    unsigned long long budget = avdyn::kDefaultBudget;
    double tolerance = avdyn::kDefaultSerreTolerance;
    std::string format = "table";
    std::string out;
    bool all = false;
    std::vector<std::string> targets;
};

void add_common(CLI::App* sub, Flags& f, bool with_l, bool with_lmax)
{
    sub->add_option("--scenario", f.scenario, "builtin scenario name or path to a JSON scenario")->required();
    if (with_l)
        sub->add_option("--l", f.l, "iterate l")->check(CLI::PositiveNumber);
    if (with_lmax)
        sub->add_option("--lmax", f.lmax, "largest iterate")->check(CLI::PositiveNumber);
    sub->add_option("--budget", f.budget, "cap on enumerated or scanned points")->capture_default_str();
    sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"table", "csv"}))->capture_default_str();
    sub->add_option("--out", f.out, "write the report to this file instead of stdout");
}

int emit(const avdyn::Report& report, const Flags& f)
{
    const std::string text = f.format == "csv" ? avdyn::render_csv(report) : avdyn::render_table(report);
    for (const auto& w : report.warnings)
        std::cerr << "warning: " << w << "\n";
    if (f.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(f.out);
    if (!os) {
        std::cerr << "error: cannot write " << f.out << "\n";
        return 1;
    }
    os << text;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact fixed-point counting for endomorphisms of abelian varieties modeled as lattice tori"};
    app.require_subcommand(1);
    Flags f;

    const std::vector<std::tuple<const char*, const char*, bool, bool>> subs{
        {"count", "number of fixed points of f^l", true, true},
        {"enumerate", "list the fixed points of f^l", true, false},
        {"growth", "growth table against q^{gl}", false, true},
        {"compare", "exact counts against the product formula over simple factors", false, true},
        {"quotient", "orbit counts of fixed points under the scenario's group action", true, true},
        {"subvariety", "fixed points on the scenario's periodic subvariety", true, true},
        {"verify", "polarization, serre, lefschetz, pfaffian, proddiv and dual-isogeny checks", true, true},
    };
    for (const auto& [name, help, with_l, with_lmax] : subs) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, f, with_l, with_lmax);
        if (std::string(name) == "verify") {
            sub->add_option("targets", f.targets, "polarization|serre|lefschetz|pfaffian|proddiv|dual-isogeny|all");
            sub->add_flag("--all", f.all, "run every target");
            sub->add_option("--tolerance", f.tolerance, "residual tolerance for the serre check")
                ->capture_default_str();
        }
    }
    auto* scenarios = app.add_subcommand("scenarios", "list builtin scenarios");
    scenarios->add_option("--format", f.format)->check(CLI::IsMember({"table", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (scenarios->parsed())
            return emit(avdyn::list_scenarios(), f);

        avdyn::RunOptions opts;
        opts.command = app.get_subcommands().front()->get_name();
        opts.scenario = f.scenario;
        if (f.l)
            opts.l = f.l;
        if (f.lmax)
            opts.l_max = f.lmax;
        opts.budget = f.budget;
        opts.tolerance = f.tolerance;
        opts.targets = f.targets;
        if (f.all)
            opts.targets.push_back("all");

        const avdyn::Scenario scenario = avdyn::load_scenario(f.scenario);
        return emit(avdyn::run(opts, scenario), f);
    } catch (const avdyn::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const avdyn::DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const avdyn::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
