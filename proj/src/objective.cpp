#include "knotopt/objective.hpp"

#include "knotopt/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace knotopt {

std::string_view to_string(ObjectiveKind kind)
{
    return kind == ObjectiveKind::ConcaveArea ? "concave" : "general";
}

double phi(const Curve& curve, const KnotVector& knots)
{
    const auto pts = knots.points();
    double total = 0.0;
    double f_prev = curve.eval(pts[0]);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double f_next = curve.eval(pts[i + 1]);
        if (pts[i] < pts[i + 1]) total += (pts[i + 1] - pts[i]) * (f_next + f_prev);
        f_prev = f_next;
    }
    return -0.5 * total;
}

std::vector<double> grad_phi(const Curve& curve, const KnotVector& knots)
{
    const auto pts = knots.points();
    std::vector<double> fv(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) fv[i] = curve.eval(pts[i]);
    std::vector<double> grad(static_cast<std::size_t>(knots.n()));
    for (int i = 1; i <= knots.n(); ++i) {
        grad[i - 1] = 0.5 * (fv[i + 1] - fv[i - 1] + curve.deriv1(pts[i]) * (pts[i - 1] - pts[i + 1]));
    }
    return grad;
}

double psi(const Curve& curve, double lo, double hi)
{
    if (!(lo <= hi)) throw std::invalid_argument("psi: requires lo <= hi");
    if (lo == hi) return 0.0;
    const double gap = integrate(curve, lo, hi) - 0.5 * (hi - lo) * (curve.eval(lo) + curve.eval(hi));
    return gap * gap;
}

namespace {

PsiPartials partials_from_gap(const Curve& curve, double lo, double hi, double gap)
{
    if (!(lo < hi)) return {};
    const double h = hi - lo;
    const double rise = curve.eval(hi) - curve.eval(lo);
    return {gap * (rise - curve.deriv1(lo) * h), gap * (rise - curve.deriv1(hi) * h)};
}

}  // namespace

PsiPartials psi_partials(const Curve& curve, double lo, double hi)
{
    if (!(lo <= hi)) throw std::invalid_argument("psi_partials: requires lo <= hi");
    if (lo == hi) return {};
    const double gap = integrate(curve, lo, hi) - 0.5 * (hi - lo) * (curve.eval(lo) + curve.eval(hi));
    return partials_from_gap(curve, lo, hi, gap);
}

double objective(const Curve& curve, const KnotVector& knots, ObjectiveKind kind)
{
    return kind == ObjectiveKind::ConcaveArea ? phi(curve, knots) : error_general(curve, knots);
}

std::vector<double> objective_gradient(const Curve& curve, const KnotVector& knots,
                                       ObjectiveKind kind)
{
    if (kind == ObjectiveKind::ConcaveArea) return grad_phi(curve, knots);

    const auto pts = knots.points();
    const auto gaps = segment_gaps_auto(curve, pts);
    const int n = knots.n();
    std::vector<double> grad(static_cast<std::size_t>(n), 0.0);
    for (int seg = 0; seg <= n; ++seg) {
        const auto p = partials_from_gap(curve, pts[seg], pts[seg + 1], gaps[seg]);
        if (seg >= 1) grad[seg - 1] += p.d_lo;   // x_seg is the lower end
        if (seg + 1 <= n) grad[seg] += p.d_hi;   // x_{seg+1} is the upper end
    }
    return grad;
}

double y_guard(double a, double b) noexcept { return 1e-12 * (b - a); }

double y_max(double a, double b) noexcept { return (b - a) / y_guard(a, b) - 1.0; }

std::vector<double> to_y(const KnotVector& knots)
{
    const double a = knots.a();
    const double b = knots.b();
    const double limit = b - y_guard(a, b);
    std::vector<double> y;
    y.reserve(knots.interior().size());
    for (double x : knots.interior()) {
        if (x > limit) {
            std::ostringstream msg;
            msg << "to_y: knot " << x << " is within 1e-12 (b - a) of b = " << b;
            throw std::domain_error(msg.str());
        }
        y.push_back((x - a) / (b - x));
    }
    return y;
}

std::vector<double> to_y_clamped(const KnotVector& knots)
{
    const double limit = knots.b() - y_guard(knots.a(), knots.b());
    std::vector<double> xs = knots.interior();
    for (double& x : xs) x = std::min(x, limit);
    return to_y(KnotVector(knots.a(), knots.b(), std::move(xs)));
}

KnotVector from_y(std::span<const double> y, double a, double b)
{
    const double cap = y_max(a, b);
    std::vector<double> xs(y.size());
    double prev = a;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!std::isfinite(y[i]) || y[i] < 0.0)
            throw std::invalid_argument("from_y: y must be finite and nonnegative");
        const double yi = std::min(y[i], cap);
        // b - (b - a) can round an ulp below a.
        xs[i] = std::clamp(b - (b - a) / (1.0 + yi), prev, b);
        prev = xs[i];
    }
    return KnotVector(a, b, std::move(xs));
}

double big_phi(const Curve& curve, double a, double b, std::span<const double> y,
               ObjectiveKind kind)
{
    return objective(curve, from_y(y, a, b), kind);
}

std::vector<double> grad_big_phi(const Curve& curve, double a, double b,
                                 std::span<const double> y, ObjectiveKind kind)
{
    auto grad = objective_gradient(curve, from_y(y, a, b), kind);
    const double cap = y_max(a, b);
    for (std::size_t i = 0; i < grad.size(); ++i) {
        const double yi = std::min(y[i], cap);
        grad[i] *= (b - a) / ((1.0 + yi) * (1.0 + yi));
    }
    return grad;
}

}  // namespace knotopt
