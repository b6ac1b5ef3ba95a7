#include "knotopt/kkt.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace knotopt {

std::vector<double> Tridiagonal::dense() const
{
    const std::size_t n = diag.size();
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = diag[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m[i * n + i + 1] = off[i];
        m[(i + 1) * n + i] = off[i];
    }
    return m;
}

Tridiagonal hessian_phi(const Curve& curve, const KnotVector& knots)
{
    const int n = knots.n();
    Tridiagonal h;
    h.diag.resize(static_cast<std::size_t>(n));
    h.off.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int i = 1; i <= n; ++i)
        h.diag[i - 1] = (knots.point(i - 1) - knots.point(i + 1)) * curve.deriv2(knots.point(i));
    for (int i = 1; i < n; ++i)
        h.off[i - 1] = curve.deriv1(knots.point(i + 1)) - curve.deriv1(knots.point(i));
    return h;
}

namespace {

Prop1Result evaluate_prop1(const Curve& curve, const KnotVector& knots, const Tridiagonal& h)
{
    const int n = knots.n();
    Prop1Result out;
    if (n == 0) return out;
    const double c = std::cos(std::numbers::pi / (n + 1));
    const double c2 = c * c;
    bool holds = std::all_of(h.diag.begin(), h.diag.end(), [](double d) { return d > 0.0; });
    for (int i = 1; i <= n - 1; ++i) {
        const double lhs = h.off[i - 1] * h.off[i - 1];
        const double rhs = 0.25 * (knots.point(i - 1) - knots.point(i + 1))
                         * (knots.point(i) - knots.point(i + 2)) * curve.deriv2(knots.point(i))
                         * curve.deriv2(knots.point(i + 1)) / c2;
        out.margins.push_back(rhs - lhs);
        holds = holds && rhs - lhs > 0.0;
    }
    out.holds = holds;
    return out;
}

}  // namespace

KktReport kkt_check(const Curve& curve, const KnotVector& knots, ObjectiveKind kind)
{
    const int n = knots.n();
    KktReport r;
    r.kind = kind;
    r.gradient = objective_gradient(curve, knots, kind);
    r.lambda.assign(static_cast<std::size_t>(n + 1), 0.0);

    std::vector<double> gap(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) gap[i] = knots.point(i + 1) - knots.point(i);
    std::vector<bool> binding(gap.size());
    for (std::size_t i = 0; i < gap.size(); ++i) binding[i] = gap[i] <= kBindingGap;
    r.strictly_interior = std::none_of(binding.begin(), binding.end(), [](bool v) { return v; });

    // grad uses 1-based knot index k -> r.gradient[k - 1].
    auto grad = [&](int k) { return r.gradient[static_cast<std::size_t>(k - 1)]; };
    for (int p = 0; p <= n;) {
        if (!binding[p]) {
            ++p;
            continue;
        }
        int q = p;
        while (q + 1 <= n && binding[q + 1]) ++q;
        if (p == 0 && q < n) {
            // Cluster pinned at a: the free gap is on the right.
            for (int k = q + 1; k >= 1; --k) r.lambda[k - 1] = grad(k) + r.lambda[k];
        } else {
            for (int k = std::max(p, 1); k <= q && k <= n; ++k) r.lambda[k] = r.lambda[k - 1] - grad(k);
        }
        p = q + 1;
    }

    for (int k = 1; k <= n; ++k) {
        const double row = grad(k) - r.lambda[k - 1] + r.lambda[k];
        r.stationarity_residual = std::max(r.stationarity_residual, std::abs(row));
    }
    for (int i = 0; i <= n; ++i)
        r.complementarity_residual =
            std::max(r.complementarity_residual, std::abs(std::min(gap[i], r.lambda[i])));

    if (kind == ObjectiveKind::ConcaveArea) {
        r.hessian = hessian_phi(curve, knots);
        auto p1 = evaluate_prop1(curve, knots, r.hessian);
        r.prop1_holds = p1.holds;
        r.prop1_margins = std::move(p1.margins);
    }
    return r;
}

Prop1Result prop1_test(const Curve& curve, const KnotVector& knots, double tolerance)
{
    const double residual = kkt_check(curve, knots, ObjectiveKind::ConcaveArea).stationarity_residual;
    if (!(residual <= tolerance))
        throw std::invalid_argument("prop1_test: knots are not a KKT point (residual "
                                    + std::to_string(residual) + ")");
    return evaluate_prop1(curve, knots, hessian_phi(curve, knots));
}

std::string to_json(const KktReport& report, int indent)
{
    nlohmann::json j;
    j["kind"] = std::string(to_string(report.kind));
    j["lambda"] = report.lambda;
    j["gradient"] = report.gradient;
    j["stationarity_residual"] = report.stationarity_residual;
    j["complementarity_residual"] = report.complementarity_residual;
    j["strictly_interior"] = report.strictly_interior;
    if (report.kind == ObjectiveKind::ConcaveArea) {
        j["hessian"] = {{"diag", report.hessian.diag}, {"off", report.hessian.off}};
        j["prop1_holds"] = report.prop1_holds;
        j["prop1_margins"] = report.prop1_margins;
        j["prop1_index_range"] = "i = 1..n-1";
    }
    return j.dump(indent);
}

}  // namespace knotopt
