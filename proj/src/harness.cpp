#include "knotopt/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace knotopt {

std::string_view to_string(MeasureMode mode)
{
    switch (mode) {
    case MeasureMode::Auto: return "auto";
    case MeasureMode::Concave: return "concave";
    case MeasureMode::General: return "general";
    }
    return "?";
}

namespace {

std::string lower(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

struct Task {
    const CurveCatalogEntry* entry;
    int n;
    ObjectiveKind kind;
};

std::vector<Task> plan(const CurveCatalog& catalog, const ExperimentSpec& spec)
{
    validate(catalog, spec);
    std::vector<Task> tasks;
    for (const auto& entry : catalog.entries()) {
        if (!spec.curve_names.empty()
            && std::find(spec.curve_names.begin(), spec.curve_names.end(), entry.name)
                   == spec.curve_names.end())
            continue;
        const auto kind = resolve_kind(spec.measure, entry.concave);
        for (int n : spec.knot_counts) tasks.push_back({&entry, n, kind});
    }
    return tasks;
}

std::string join_knots(const std::vector<double>& xs)
{
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g", xs[i]);
        if (i) out += ';';
        out += buf;
    }
    return out;
}

}  // namespace

MeasureMode parse_measure(std::string_view text)
{
    const auto s = lower(text);
    if (s == "auto") return MeasureMode::Auto;
    if (s == "concave") return MeasureMode::Concave;
    if (s == "general") return MeasureMode::General;
    throw std::invalid_argument("unknown measure '" + std::string(text) + "'");
}

OutputFormat parse_format(std::string_view text)
{
    const auto s = lower(text);
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

ObjectiveKind resolve_kind(MeasureMode mode, bool concave)
{
    switch (mode) {
    case MeasureMode::Concave: return ObjectiveKind::ConcaveArea;
    case MeasureMode::General: return ObjectiveKind::GeneralSquared;
    case MeasureMode::Auto: break;
    }
    return concave ? ObjectiveKind::ConcaveArea : ObjectiveKind::GeneralSquared;
}

void validate(const CurveCatalog& catalog, const ExperimentSpec& spec)
{
    for (const auto& name : spec.curve_names)
        if (!catalog.contains(name)) throw std::invalid_argument("unknown curve '" + name + "'");
    if (spec.knot_counts.empty()) throw std::invalid_argument("no knot counts given");
    for (int n : spec.knot_counts)
        if (n < 1) throw std::invalid_argument("knot counts must be >= 1");
    spec.solver_config.validate();
}

ResultRow run_row(const CurveCatalogEntry& entry, int n, ObjectiveKind kind,
                  const SpgConfig& config)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    ResultRow row;
    row.curve_name = entry.name;
    row.a = entry.a;
    row.b = entry.b;
    row.n_knots = n;
    row.kind = kind;
    row.orig_error = row.orig_error_interior = row.spg_error = row.reduction_pct = nan;
    try {
        const auto even = KnotVector::equally_spaced(entry.a, entry.b, n);
        row.orig_error_interior = error_general(entry.curve, even, SegmentSpan::Interior);
        row.orig_error = measure_error(entry.curve, even, kind);
        const auto report = solve(entry.curve, entry.a, entry.b, kind, n, config, even);
        row.spg_error = report.final_error;
        row.reduction_pct =
            row.orig_error > 0.0 ? (row.orig_error - row.spg_error) / row.orig_error * 100.0 : 0.0;
        row.iterations = report.iterations;
        row.termination = report.termination;
        row.final_knots = report.final_knots.interior();
    } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
    }
    return row;
}

std::vector<ResultRow> run_catalog_serial(const CurveCatalog& catalog, const ExperimentSpec& spec)
{
    const auto tasks = plan(catalog, spec);
    std::vector<ResultRow> rows;
    rows.reserve(tasks.size());
    for (const auto& t : tasks) rows.push_back(run_row(*t.entry, t.n, t.kind, spec.solver_config));
    return rows;
}

std::vector<ResultRow> run_catalog(const CurveCatalog& catalog, const ExperimentSpec& spec)
{
    const auto tasks = plan(catalog, spec);
    std::vector<ResultRow> rows(tasks.size());
    const auto count = static_cast<long>(tasks.size());
    // run_row never throws; each row lands in its own slot.
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i)
        rows[i] = run_row(*tasks[i].entry, tasks[i].n, tasks[i].kind, spec.solver_config);
    return rows;
}

std::string format_sci(double value)
{
    if (std::isnan(value)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6E", value);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows)
{
    out << "curve,a,b,n_knots,measure,orig_error,orig_error_interior,spg_error,reduction_pct,"
           "iterations,termination,final_knots,status\n";
    for (const auto& r : rows) {
        std::string status = r.status;
        std::replace(status.begin(), status.end(), ',', ';');
        std::replace(status.begin(), status.end(), '\n', ' ');
        char pct[32];
        std::snprintf(pct, sizeof pct, "%.2f", r.reduction_pct);
        out << r.curve_name << ',' << r.a << ',' << r.b << ',' << r.n_knots << ','
            << to_string(r.kind) << ',' << format_sci(r.orig_error) << ','
            << format_sci(r.orig_error_interior) << ',' << format_sci(r.spg_error) << ',' << pct
            << ',' << r.iterations << ',' << to_string(r.termination) << ','
            << join_knots(r.final_knots) << ',' << status << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<ResultRow>& rows)
{
    // Numbers go out as the same formatted strings as the CSV so both
    // outputs are byte-stable.
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["curve"] = r.curve_name;
        j["a"] = r.a;
        j["b"] = r.b;
        j["n_knots"] = r.n_knots;
        j["measure"] = std::string(to_string(r.kind));
        j["orig_error"] = format_sci(r.orig_error);
        j["orig_error_interior"] = format_sci(r.orig_error_interior);
        j["spg_error"] = format_sci(r.spg_error);
        j["reduction_pct"] = std::isfinite(r.reduction_pct) ? r.reduction_pct : 0.0;
        j["iterations"] = r.iterations;
        j["termination"] = std::string(to_string(r.termination));
        j["final_knots"] = r.final_knots;
        j["status"] = r.status;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, OutputFormat format)
{
    if (format == OutputFormat::Csv)
        write_csv(out, rows);
    else
        write_json(out, rows);
}

std::vector<ResultRow> run_catalog_to_file(const CurveCatalog& catalog, const ExperimentSpec& spec,
                                           const std::filesystem::path& path, OutputFormat format)
{
    auto rows = run_catalog(catalog, spec);
    std::ostringstream buffer;
    write_rows(buffer, rows, format);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    file << buffer.str();
    if (!file) throw std::runtime_error("failed writing '" + path.string() + "'");
    return rows;
}

void emit_plot_data(std::ostream& out, const Curve& curve, const KnotVector& knots)
{
    const auto pl = build_pl(curve, knots);
    const double a = knots.a();
    const double b = knots.b();
    char buf[128];
    out << "kind,x,f,fhat\n";
    for (int k = 0; k < kPlotSamples; ++k) {
        const double x = k + 1 == kPlotSamples ? b : a + (b - a) * k / (kPlotSamples - 1);
        std::snprintf(buf, sizeof buf, "sample,%.17g,%.17g,%.17g\n", x, curve.eval(x), pl(x));
        out << buf;
    }
    for (double x : knots.points()) {
        std::snprintf(buf, sizeof buf, "knot,%.17g,%.17g,%.17g\n", x, curve.eval(x), pl(x));
        out << buf;
    }
}

void emit_plot_data(const Curve& curve, const KnotVector& knots, const std::filesystem::path& path)
{
    std::ostringstream buffer;
    emit_plot_data(buffer, curve, knots);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    file << buffer.str();
    if (!file) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace knotopt
