#include "knotopt/spg.hpp"

#include "knotopt/cone_projection.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace knotopt {

std::string_view to_string(BbRule rule) { return rule == BbRule::BB1 ? "bb1" : "paper"; }

std::string_view to_string(Backtrack mode)
{
    return mode == Backtrack::SeededRandom ? "random" : "halving";
}

std::string_view to_string(Termination reason)
{
    switch (reason) {
    case Termination::MaxIter: return "MaxIter";
    case Termination::NoImprovement: return "NoImprovement";
    case Termination::Stationary: return "Stationary";
    }
    return "?";
}

void SpgConfig::validate() const
{
    if (!(alpha_min > 0.0 && alpha_min < alpha_max))
        throw std::invalid_argument("SpgConfig: need 0 < alpha_min < alpha_max");
    if (history < 0) throw std::invalid_argument("SpgConfig: history must be >= 0");
    if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("SpgConfig: nu must be in (0, 1)");
    if (!(epsilon > 0.0)) throw std::invalid_argument("SpgConfig: epsilon must be > 0");
    if (!(improvement_tol > 0.0))
        throw std::invalid_argument("SpgConfig: improvement_tol must be > 0");
    if (improvement_window < 1)
        throw std::invalid_argument("SpgConfig: improvement_window must be >= 1");
    if (max_iter < 1) throw std::invalid_argument("SpgConfig: max_iter must be >= 1");
}

double backtrack_step(double alpha, Backtrack mode, std::mt19937_64& rng)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("backtrack_step: alpha must be > 0");
    if (mode == Backtrack::Halving) return 0.5 * alpha;
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    return alpha * unit;
}

double measure_error(const Curve& curve, const KnotVector& knots, ObjectiveKind kind)
{
    return kind == ObjectiveKind::ConcaveArea ? error_concave(curve, knots)
                                              : error_general(curve, knots);
}

namespace {

constexpr double kMinLineSearchStep = 1e-16;

double dot(std::span<const double> u, std::span<const double> v)
{
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

// Convex combinations of cone points can leave the cone by an ulp.
void restore_cone(std::vector<double>& y)
{
    double prev = 0.0;
    for (double& v : y) {
        v = std::max(v, prev);
        prev = v;
    }
}

}  // namespace

SolveReport solve(const Curve& curve, double a, double b, ObjectiveKind kind, int n,
                  const SpgConfig& config, const std::optional<KnotVector>& init,
                  const StepObserver& observer)
{
    config.validate();
    if (n < 1) throw std::invalid_argument("solve: need at least one knot");
    const KnotVector start = init ? *init : KnotVector::equally_spaced(a, b, n);
    if (start.n() != n || start.a() != a || start.b() != b)
        throw std::invalid_argument("solve: initial knots do not match n, a, b");

    std::mt19937_64 rng(config.seed);
    int iteration = 0;
    std::vector<double> y = project(to_y_clamped(start));

    auto fail = [&](const std::exception& e) -> SolveError {
        std::ostringstream msg;
        msg << "solve: objective evaluation failed at iteration " << iteration << ": " << e.what();
        return SolveError(msg.str(), iteration, y);
    };
    auto value_at = [&](std::span<const double> yy) {
        try {
            return big_phi(curve, a, b, yy, kind);
        } catch (const std::domain_error& e) {
            throw fail(e);
        } catch (const NumericError& e) {
            throw fail(e);
        }
    };
    auto gradient_at = [&](std::span<const double> yy) {
        try {
            return grad_big_phi(curve, a, b, yy, kind);
        } catch (const std::domain_error& e) {
            throw fail(e);
        } catch (const NumericError& e) {
            throw fail(e);
        }
    };

    double f = value_at(y);
    if (!std::isfinite(f)) throw SolveError("solve: objective is not finite at the start", 0, y);
    std::vector<double> g = gradient_at(y);

    SolveReport report{from_y(y, a, b), 0.0, 0.0, 0, Termination::MaxIter, {}, {}};
    report.initial_error = measure_error(curve, start, kind);
    report.objective_trace.push_back(f);

    std::deque<double> recent{f};
    std::vector<double> best_y = y;
    double best_f = f;
    int stalled = 0;
    double alpha_bb = 1.0;
    bool finished = false;

    std::vector<double> trial(static_cast<std::size_t>(n));
    std::vector<double> d(static_cast<std::size_t>(n));
    std::vector<double> y_new(static_cast<std::size_t>(n));

    for (iteration = 0; iteration < config.max_iter && !finished; ++iteration) {
        const double step = std::clamp(alpha_bb, config.alpha_min, config.alpha_max);
        for (int i = 0; i < n; ++i) trial[i] = y[i] - step * g[i];
        const auto projected = project(trial);
        for (int i = 0; i < n; ++i) d[i] = projected[i] - y[i];
        const double d_norm = std::sqrt(dot(d, d));
        report.d_norm_trace.push_back(d_norm);
        if (!std::isfinite(d_norm)) throw SolveError("solve: non-finite search direction", iteration, y);
        if (d_norm <= config.epsilon) {
            report.termination = Termination::Stationary;
            finished = true;
            break;
        }

        const double bound = *std::max_element(recent.begin(), recent.end());
        const double directional = dot(g, d);
        double alpha = 1.0;
        double f_new = 0.0;
        for (;;) {
            for (int i = 0; i < n; ++i) y_new[i] = y[i] + alpha * d[i];
            restore_cone(y_new);
            f_new = value_at(y_new);
            if (std::isfinite(f_new) && f_new <= bound + config.nu * alpha * directional) break;
            alpha = backtrack_step(alpha, config.backtrack, rng);
            if (alpha < kMinLineSearchStep) break;
        }
        if (alpha < kMinLineSearchStep) {
            report.termination = Termination::NoImprovement;
            finished = true;
            break;
        }
        if (observer) observer(SpgStep{iteration, alpha, f_new, bound, directional, y_new});

        const auto g_new = gradient_at(y_new);
        double ss = 0.0, sz = 0.0, zz = 0.0;
        for (int i = 0; i < n; ++i) {
            const double s = y_new[i] - y[i];
            const double z = g_new[i] - g[i];
            ss += s * s;
            sz += s * z;
            zz += z * z;
        }
        if (config.bb_rule == BbRule::BB1)
            alpha_bb = sz > 0.0 ? ss / sz : config.alpha_max;
        else
            alpha_bb = ss > 0.0 ? zz / ss : config.alpha_max;

        const double change = std::abs(f_new - f);
        const double scale = std::max(std::abs(f), std::numeric_limits<double>::min());
        // Nonmonotone excursions change Phi a lot; only flat progress counts.
        stalled = change <= config.improvement_tol * scale ? stalled + 1 : 0;

        y = y_new;
        g = g_new;
        f = f_new;
        report.objective_trace.push_back(f);
        recent.push_back(f);
        while (recent.size() > static_cast<std::size_t>(config.history) + 1) recent.pop_front();
        report.iterations = iteration + 1;
        if (f < best_f) {
            best_f = f;
            best_y = y;
        }
        if (stalled >= config.improvement_window) {
            report.termination = Termination::NoImprovement;
            finished = true;
        }
    }

    report.final_knots = from_y(best_y, a, b);
    report.final_error = measure_error(curve, report.final_knots, kind);
    if (report.final_error > report.initial_error) {
        // Phi and the reported measure differ by a constant only up to
        // quadrature rounding; never hand back something worse than the start.
        report.final_knots = start;
        report.final_error = report.initial_error;
    }
    return report;
}

}  // namespace knotopt
