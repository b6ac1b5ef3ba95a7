#include "knotopt/catalog.hpp"
#include "knotopt/harness.hpp"
#include "fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace knotopt;
namespace fs = std::filesystem;

namespace {

std::string csv_of(const std::vector<ResultRow>& rows)
{
    std::ostringstream out;
    write_csv(out, rows);
    return out.str();
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "knotopt_tests";
    fs::create_directories(dir);
    const auto p = dir / name;
    fs::remove(p);
    return p;
}

std::vector<std::string> concave_names()
{
    std::vector<std::string> names;
    for (const auto& e : test_catalog().entries())
        if (e.concave) names.push_back(e.name);
    return names;
}

int count_lines(const std::string& text)
{
    return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("measure mapping")
{
    CHECK(resolve_kind(MeasureMode::Auto, true) == ObjectiveKind::ConcaveArea);
    CHECK(resolve_kind(MeasureMode::Auto, false) == ObjectiveKind::GeneralSquared);
    CHECK(resolve_kind(MeasureMode::General, true) == ObjectiveKind::GeneralSquared);
    CHECK(resolve_kind(MeasureMode::Concave, false) == ObjectiveKind::ConcaveArea);
    CHECK(parse_measure("GENERAL") == MeasureMode::General);
    CHECK_THROWS_AS(parse_measure("l2"), std::invalid_argument);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("concave filter under Auto gives fourteen area-measure rows")
{
    ExperimentSpec spec;
    spec.curve_names = concave_names();
    const auto rows = run_catalog(default_catalog(), spec);
    REQUIRE(rows.size() == 14);
    for (const auto& r : rows) {
        CAPTURE(r.curve_name);
        CHECK(r.status == "ok");
        CHECK(r.kind == ObjectiveKind::ConcaveArea);
        CHECK(r.spg_error <= r.orig_error);
        CHECK(r.reduction_pct >= 0.0);
        CHECK(r.reduction_pct <= 100.0);
        CHECK(r.final_knots.size() == static_cast<std::size_t>(r.n_knots));
    }
    CHECK(rows[0].curve_name == "logistic1a");
    CHECK(rows[0].n_knots == 4);
    CHECK(rows[1].n_knots == 8);
}

TEST_CASE("logistic3a with eight knots")
{
    ExperimentSpec spec;
    spec.curve_names = {"logistic3a"};
    spec.knot_counts = {8};
    const auto rows = run_catalog(default_catalog(), spec);
    REQUIRE(rows.size() == 1);
    // The published equal-spacing value is the interior-segment squared error.
    CHECK(rows[0].orig_error_interior == doctest::Approx(5.594112e-08).epsilon(1e-3));
    const auto& e = test_catalog().at("logistic3a");
    CHECK(rows[0].orig_error == error_concave(e.curve, KnotVector::equally_spaced(e.a, e.b, 8)));
}

TEST_CASE("unknown curves fail before any output is created")
{
    ExperimentSpec spec;
    spec.curve_names = {"logistic1a", "nosuchcurve"};
    const auto path = scratch("missing.csv");
    CHECK_THROWS_AS(run_catalog_to_file(default_catalog(), spec, path, OutputFormat::Csv),
                    std::invalid_argument);
    CHECK_FALSE(fs::exists(path));
    ExperimentSpec zero;
    zero.knot_counts = {0};
    CHECK_THROWS_AS(run_catalog(default_catalog(), zero), std::invalid_argument);
}

TEST_CASE("failed solves are recorded in the row")
{
    // Negative base to a fractional power on the left half of the interval.
    CurveCatalog cat({CurveCatalogEntry{"broken", Curve::weibull(1, -1, 2.2, 1, 0), false, -1.0, 1.0},
                      CurveCatalogEntry{"fine", Curve::arctan(0, 1, 1, 0), false, -1.0, 1.0}});
    const auto rows = run_catalog(cat, ExperimentSpec{});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].status.rfind("error: ", 0) == 0);
    CHECK(std::isnan(rows[0].spg_error));
    CHECK(rows[2].status == "ok");
    CHECK(csv_of(rows).find("nan") != std::string::npos);
}

TEST_CASE("full catalog: parallel rows equal the serial reference and repeat byte for byte")
{
    const auto cat = default_catalog();
    const ExperimentSpec spec;
    const auto first = csv_of(run_catalog(cat, spec));
    const auto second = csv_of(run_catalog(cat, spec));
    const auto serial = csv_of(run_catalog_serial(cat, spec));
    CHECK(first == second);
    CHECK(first == serial);
    CHECK(count_lines(first) == 41);
}

TEST_CASE("file output in both formats")
{
    ExperimentSpec spec;
    spec.curve_names = {"arctan2b"};
    const auto csv = scratch("rows.csv");
    const auto json = scratch("rows.json");
    run_catalog_to_file(default_catalog(), spec, csv, OutputFormat::Csv);
    const auto rows = run_catalog_to_file(default_catalog(), spec, json, OutputFormat::Json);
    std::ifstream in(json);
    const auto j = nlohmann::json::parse(in);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["curve"] == "arctan2b");
    CHECK(j[0]["measure"] == "general");
    CHECK(j[0]["orig_error"] == format_sci(rows[0].orig_error));
    std::ifstream c(csv);
    std::string header;
    std::getline(c, header);
    CHECK(header.rfind("curve,a,b,n_knots,measure,orig_error", 0) == 0);
}

TEST_CASE("number formatting")
{
    CHECK(format_sci(6.166057e-07) == "6.166057E-07");
    CHECK(format_sci(0.0) == "0.000000E+00");
    CHECK(format_sci(std::nan("")) == "nan");
}

TEST_CASE("plot data rows")
{
    const auto& e = test_catalog().at("logistic1a");
    const auto knots = solve(e.curve, e.a, e.b, ObjectiveKind::ConcaveArea, 4).final_knots;
    std::ostringstream out;
    emit_plot_data(out, e.curve, knots);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "kind,x,f,fhat");
    int samples = 0, knot_rows = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string kind, x, f, fhat;
        std::getline(row, kind, ',');
        std::getline(row, x, ',');
        std::getline(row, f, ',');
        std::getline(row, fhat, ',');
        if (kind == "sample") ++samples;
        if (kind == "knot") {
            ++knot_rows;
            CHECK(std::abs(std::stod(f) - std::stod(fhat)) <= 1e-10);
        }
    }
    CHECK(samples == 500);
    CHECK(knot_rows == 6);
}

TEST_CASE("plot data without knots is the secant")
{
    const auto& e = test_catalog().at("gompertz1a");
    std::ostringstream out;
    emit_plot_data(out, e.curve, KnotVector(e.a, e.b, {}));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    const double slope = (e.curve.eval(e.b) - e.curve.eval(e.a)) / (e.b - e.a);
    int rows = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string kind, x, f, fhat;
        std::getline(row, kind, ',');
        std::getline(row, x, ',');
        std::getline(row, f, ',');
        std::getline(row, fhat, ',');
        CHECK(std::stod(fhat) == doctest::Approx(e.curve.eval(e.a) + slope * (std::stod(x) - e.a)).epsilon(1e-12));
        ++rows;
    }
    CHECK(rows == 502);
    CHECK_THROWS(emit_plot_data(e.curve, KnotVector(e.a, e.b, {}), "/nonexistent/dir/plot.csv"));
}

TEST_CASE("command line")
{
    const std::string cli = KNOTOPT_CLI_PATH;
    const auto out = scratch("cli.csv");
    const auto again = scratch("cli_again.csv");
    CHECK(std::system((cli + " run --curves logistic1a,arctan1b --out " + out.string()).c_str()) == 0);
    CHECK(std::system((cli + " run --curves logistic1a,arctan1b --seed 42 --out " + again.string()).c_str()) == 0);
    std::ifstream a(out), b(again);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(count_lines(sa.str()) == 5);
    CHECK(sa.str() == sb.str());

    const auto missing = scratch("cli_missing.csv");
    CHECK(std::system((cli + " run --curves nosuch --out " + missing.string() + " 2>/dev/null").c_str()) != 0);
    CHECK_FALSE(fs::exists(missing));

    const auto seeded = scratch("cli_env.csv");
    CHECK(std::system(("KNOTOPT_SEED=7 " + cli + " run --curves gompertz1b --knots 4 --backtrack halving --out "
                       + seeded.string()).c_str()) == 0);
    CHECK(fs::exists(seeded));
    CHECK(std::system(("KNOTOPT_SEED=abc " + cli + " run --curves logistic1a 2>/dev/null >/dev/null").c_str()) != 0);

    const auto solved = scratch("cli_solve.json");
    CHECK(std::system((cli + " solve --curves logistic1a --knots 4 --bb paper --out " + solved.string()).c_str()) == 0);
    std::ifstream sj(solved);
    const auto j = nlohmann::json::parse(sj);
    CHECK(j["knots"].size() == 4);

    const auto checked = scratch("cli_check.json");
    CHECK(std::system((cli + " check --curves logistic1a --knots 0.5,1,1.5 --out " + checked.string()).c_str()) == 0);
    std::ifstream cj(checked);
    CHECK(nlohmann::json::parse(cj)["lambda"].size() == 4);

    const auto plot = scratch("cli_plot.csv");
    CHECK(std::system((cli + " plot-data --curves logistic1a --knots 4 --out " + plot.string()).c_str()) == 0);
    std::ifstream pf(plot);
    std::stringstream ps;
    ps << pf.rdbuf();
    CHECK(count_lines(ps.str()) == 507);
}

}
