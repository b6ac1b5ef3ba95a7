#include "knotopt/catalog.hpp"
#include "knotopt/harness.hpp"
#include "knotopt/kkt.hpp"
#include "knotopt/spg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace knotopt;

namespace {

struct Common {
    std::string catalog_path;
    std::string curves;
    std::string measure = "auto";
    std::uint64_t seed = 42;
    std::string bb = "bb1";
    std::string backtrack = "random";
    std::string out;
    std::string format = "csv";
};

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("KNOTOPT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("KNOTOPT_SEED is not an integer: ") + env);
        }
    }
    return 42;
}

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--catalog", c.catalog_path, "Curve catalog CSV (default: built-in table)");
    cmd->add_option("--curves", c.curves, "Comma-separated curve names");
    cmd->add_option("--measure", c.measure, "auto | concave | general")
        ->check(CLI::IsMember({"auto", "concave", "general"}, CLI::ignore_case));
    cmd->add_option("--seed", c.seed, "Line-search RNG seed (env KNOTOPT_SEED)");
    cmd->add_option("--bb", c.bb, "bb1 | paper")->check(CLI::IsMember({"bb1", "paper"}));
    cmd->add_option("--backtrack", c.backtrack, "random | halving")
        ->check(CLI::IsMember({"random", "halving"}));
    cmd->add_option("--out", c.out, "Output file (default: stdout)");
    cmd->add_option("--format", c.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}, CLI::ignore_case));
}

CurveCatalog catalog_of(const Common& c)
{
    return c.catalog_path.empty() ? default_catalog() : load_catalog(c.catalog_path);
}

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

SpgConfig config_of(const Common& c)
{
    SpgConfig cfg;
    cfg.seed = c.seed;
    cfg.bb_rule = c.bb == "paper" ? BbRule::PaperLiteral : BbRule::BB1;
    cfg.backtrack = c.backtrack == "halving" ? Backtrack::Halving : Backtrack::SeededRandom;
    return cfg;
}

const CurveCatalogEntry& single_curve(const CurveCatalog& catalog, const Common& c)
{
    const auto names = split(c.curves);
    if (names.size() != 1) throw std::invalid_argument("--curves must name exactly one curve");
    if (!catalog.contains(names[0])) throw std::invalid_argument("unknown curve '" + names[0] + "'");
    return catalog.at(names[0]);
}

void emit(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + c.out + "' for writing");
    file << text;
}

int cmd_run(const Common& c, const std::vector<int>& knots)
{
    const auto catalog = catalog_of(c);
    ExperimentSpec spec;
    spec.curve_names = split(c.curves);
    if (!knots.empty()) spec.knot_counts = knots;
    spec.measure = parse_measure(c.measure);
    spec.solver_config = config_of(c);
    const auto format = parse_format(c.format);
    std::vector<ResultRow> rows;
    if (c.out.empty()) {
        rows = run_catalog(catalog, spec);
        write_rows(std::cout, rows, format);
    } else {
        rows = run_catalog_to_file(catalog, spec, c.out, format);
    }
    for (const auto& r : rows)
        if (r.status != "ok") std::cerr << r.curve_name << "/" << r.n_knots << ": " << r.status << "\n";
    return 0;
}

int cmd_solve(const Common& c, const std::vector<int>& knots)
{
    const auto catalog = catalog_of(c);
    const auto& entry = single_curve(catalog, c);
    if (knots.size() != 1) throw std::invalid_argument("solve takes a single --knots count");
    const auto kind = resolve_kind(parse_measure(c.measure), entry.concave);
    const auto report = solve(entry.curve, entry.a, entry.b, kind, knots[0], config_of(c));
    nlohmann::ordered_json j;
    j["curve"] = entry.name;
    j["measure"] = std::string(to_string(kind));
    j["knots"] = report.final_knots.interior();
    j["initial_error"] = format_sci(report.initial_error);
    j["final_error"] = format_sci(report.final_error);
    j["iterations"] = report.iterations;
    j["termination"] = std::string(to_string(report.termination));
    emit(c, j.dump(2) + "\n");
    return 0;
}

int cmd_check(const Common& c, const std::vector<double>& at)
{
    const auto catalog = catalog_of(c);
    const auto& entry = single_curve(catalog, c);
    const auto kind = resolve_kind(parse_measure(c.measure), entry.concave);
    const KnotVector knots(entry.a, entry.b, at);
    emit(c, to_json(kkt_check(entry.curve, knots, kind)) + "\n");
    return 0;
}

int cmd_plot(const Common& c, const std::vector<int>& knots, bool equal)
{
    const auto catalog = catalog_of(c);
    const auto& entry = single_curve(catalog, c);
    if (knots.size() != 1) throw std::invalid_argument("plot-data takes a single --knots count");
    const int n = knots[0];
    std::optional<KnotVector> chosen;
    if (equal || n == 0) {
        chosen = KnotVector::equally_spaced(entry.a, entry.b, n);
    } else {
        const auto kind = resolve_kind(parse_measure(c.measure), entry.concave);
        chosen = solve(entry.curve, entry.a, entry.b, kind, n, config_of(c)).final_knots;
    }
    if (c.out.empty())
        emit_plot_data(std::cout, entry.curve, *chosen);
    else
        emit_plot_data(entry.curve, *chosen, c.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Knot placement for piecewise-linear approximation"};
    app.require_subcommand(1);

    Common run_opts, solve_opts, check_opts, plot_opts;
    std::vector<int> run_knots, solve_knots, plot_knots;
    std::vector<double> check_knots;
    bool plot_equal = false;

    try {
        const auto seed = default_seed();
        for (Common* c : {&run_opts, &solve_opts, &check_opts, &plot_opts}) c->seed = seed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto* run = app.add_subcommand("run", "Run catalog experiments");
    add_common(run, run_opts);
    run->add_option("--knots", run_knots, "Knot counts (default 4,8)")->delimiter(',');

    auto* solve_cmd = app.add_subcommand("solve", "Optimize the knots of one curve");
    add_common(solve_cmd, solve_opts);
    solve_cmd->add_option("--knots", solve_knots, "Knot count")->delimiter(',')->required();

    auto* check = app.add_subcommand("check", "KKT diagnostics at given knots");
    add_common(check, check_opts);
    check->add_option("--knots", check_knots, "Interior knot positions")->delimiter(',');

    auto* plot = app.add_subcommand("plot-data", "Sample the curve and its interpolant");
    add_common(plot, plot_opts);
    plot->add_option("--knots", plot_knots, "Knot count")->delimiter(',')->required();
    plot->add_flag("--equal", plot_equal, "Use equally spaced knots instead of optimizing");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opts, run_knots);
        if (solve_cmd->parsed()) return cmd_solve(solve_opts, solve_knots);
        if (check->parsed()) return cmd_check(check_opts, check_knots);
        if (plot->parsed()) return cmd_plot(plot_opts, plot_knots, plot_equal);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
