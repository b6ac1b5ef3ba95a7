#pragma once

#include "knotopt/catalog.hpp"
#include "knotopt/objective.hpp"
#include "knotopt/pl_approx.hpp"
#include "knotopt/spg.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace knotopt {

/// Auto: concave rows use ConcaveArea, the rest GeneralSquared.
enum class MeasureMode { Auto, Concave, General };

std::string_view to_string(MeasureMode mode);
MeasureMode parse_measure(std::string_view text);

struct ExperimentSpec {
    std::vector<std::string> curve_names;  // empty selects every catalog row
    std::vector<int> knot_counts{4, 8};
    MeasureMode measure = MeasureMode::Auto;
    SpgConfig solver_config;
};

struct ResultRow {
    std::string curve_name;
    double a = 0.0;
    double b = 0.0;
    int n_knots = 0;
    ObjectiveKind kind = ObjectiveKind::ConcaveArea;
    double orig_error = 0.0;           // equal spacing, measure of `kind`
    double orig_error_interior = 0.0;  // equal spacing, squared gaps of interior segments
    double spg_error = 0.0;
    double reduction_pct = 0.0;
    int iterations = 0;
    Termination termination = Termination::MaxIter;
    std::vector<double> final_knots;
    std::string status = "ok";         // "ok" or "error: <message>"
};

/// Throws std::invalid_argument for unknown curve names or knot counts < 1.
void validate(const CurveCatalog& catalog, const ExperimentSpec& spec);

ObjectiveKind resolve_kind(MeasureMode mode, bool concave);

/// Rows ordered by catalog entry, then by knot count.  A failed solve is
/// recorded in the row's status and the run continues.
std::vector<ResultRow> run_catalog(const CurveCatalog& catalog, const ExperimentSpec& spec);
/// Reference path: same rows, one at a time.
std::vector<ResultRow> run_catalog_serial(const CurveCatalog& catalog, const ExperimentSpec& spec);

ResultRow run_row(const CurveCatalogEntry& entry, int n, ObjectiveKind kind,
                  const SpgConfig& config);

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(std::string_view text);

/// Scientific notation, 7 significant digits ("6.166057E-07").
std::string format_sci(double value);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_json(std::ostream& out, const std::vector<ResultRow>& rows);
void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, OutputFormat format);

/// Validates, runs every row, and only then creates `path`.
std::vector<ResultRow> run_catalog_to_file(const CurveCatalog& catalog, const ExperimentSpec& spec,
                                           const std::filesystem::path& path, OutputFormat format);

inline constexpr int kPlotSamples = 500;

/// CSV with header kind,x,f,fhat: kPlotSamples "sample" rows on a uniform
/// grid over [a, b], then one "knot" row per point a, x_1..x_n, b.
void emit_plot_data(std::ostream& out, const Curve& curve, const KnotVector& knots);
/// Throws std::runtime_error if the file cannot be written.
void emit_plot_data(const Curve& curve, const KnotVector& knots, const std::filesystem::path& path);

}  // namespace knotopt
