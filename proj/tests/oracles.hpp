#pragma once

// Independent reference computations for the tests.  Nothing here calls the
// library's quadrature, projection or gradient code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

/// Fourth-order central difference.
inline double derivative(const std::function<double(double)>& g, double x, double h)
{
    return (-g(x + 2 * h) + 8 * g(x + h) - 8 * g(x - h) + g(x - 2 * h)) / (12 * h);
}

/// Second-order central difference, the spec's stencil for curve derivatives.
inline double central(const std::function<double(double)>& g, double x, double h)
{
    return (g(x + h) - g(x - h)) / (2 * h);
}

/// Composite Simpson on `panels` (even) subintervals.
inline double simpson(const std::function<double(double)>& g, double lo, double hi, int panels)
{
    const double h = (hi - lo) / panels;
    double s = g(lo) + g(hi);
    for (int i = 1; i < panels; ++i) s += g(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Gradient of a multivariate function by fourth-order central differences.
inline std::vector<double> gradient(const std::function<double(const std::vector<double>&)>& g,
                                    std::vector<double> x, double h)
{
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double x0 = x[i];
        auto at = [&](double v) {
            x[i] = v;
            const double r = g(x);
            x[i] = x0;
            return r;
        };
        out[i] = (-at(x0 + 2 * h) + 8 * at(x0 + h) - 8 * at(x0 - h) + at(x0 - 2 * h)) / (12 * h);
    }
    return out;
}

/// Projection onto {0 <= y_1 <= ... <= y_n} by enumerating which of the n
/// constraints (y_1 >= 0, y_{i+1} >= y_i) hold with equality.  Each pattern
/// fixes the tied groups to their mean (or to 0 when tied to the origin);
/// the answer is the closest feasible candidate.
inline std::vector<double> brute_force_cone_projection(const std::vector<double>& v)
{
    const std::size_t n = v.size();
    std::vector<double> best;
    double best_dist = std::numeric_limits<double>::infinity();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<double> cand(n);
        std::size_t start = 0;
        while (start < n) {
            std::size_t end = start + 1;
            while (end < n && (mask >> end & 1u)) ++end;  // bit i ties y_i to y_{i-1}
            double mean = 0.0;
            for (std::size_t k = start; k < end; ++k) mean += v[k];
            mean /= static_cast<double>(end - start);
            if (start == 0 && (mask & 1u)) mean = 0.0;  // bit 0 pins y_1 to 0
            for (std::size_t k = start; k < end; ++k) cand[k] = mean;
            start = end;
        }
        bool feasible = cand.empty() || cand[0] >= 0.0;
        for (std::size_t k = 1; k < n && feasible; ++k) feasible = cand[k] >= cand[k - 1];
        if (!feasible) continue;
        double dist = 0.0;
        for (std::size_t k = 0; k < n; ++k) dist += (cand[k] - v[k]) * (cand[k] - v[k]);
        if (dist < best_dist) {
            best_dist = dist;
            best = cand;
        }
    }
    return best;
}

/// Ordered interior knots with every gap at least `min_frac` of the
/// average spacing.
inline std::vector<double> random_knots(std::mt19937_64& rng, double a, double b, int n,
                                        double min_frac = 0.2)
{
    std::uniform_real_distribution<double> w(min_frac, 1.0);
    std::vector<double> gaps(static_cast<std::size_t>(n + 1));
    double total = 0.0;
    for (double& g : gaps) total += (g = w(rng));
    std::vector<double> xs(static_cast<std::size_t>(n));
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += gaps[i];
        xs[i] = a + (b - a) * acc / total;
    }
    return xs;
}

/// |analytic - reference| within rel_tol of the reference, or within
/// abs_tol when the reference magnitude is below small.
inline bool close(double analytic, double reference, double rel_tol, double abs_tol, double small)
{
    const double diff = std::abs(analytic - reference);
    if (std::abs(reference) < small) return diff <= abs_tol;
    return diff <= rel_tol * std::abs(reference);
}

/// Closed forms for f(x) = 1 / (1 + e^{-x}).
inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
inline double sigmoid_integral(double lo, double hi)
{
    return std::log1p(std::exp(hi)) - std::log1p(std::exp(lo));
}

/// Area gap of the interpolant of the sigmoid through `pts`, per segment.
inline std::vector<double> sigmoid_gaps(const std::vector<double>& pts)
{
    std::vector<double> g;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        g.push_back(sigmoid_integral(pts[i], pts[i + 1])
                    - 0.5 * (pts[i + 1] - pts[i]) * (sigmoid(pts[i]) + sigmoid(pts[i + 1])));
    return g;
}

}  // namespace oracle
