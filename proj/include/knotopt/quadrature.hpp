#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace knotopt {

/// Raised when an iterative numeric routine cannot reach its tolerance.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    int intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15 table).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo, hi, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod15(const F& f, double lo, double hi)
{
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::abs(kronrod);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    const double value = kronrod * half;
    double err = std::abs((kronrod - gauss) * half);
    // Roundoff floor: below this the panel is as accurate as doubles allow.
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half);
    err = std::max(err, floor);
    return {lo, hi, value, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [lo, hi].
///
/// Panels with the largest error estimate are bisected until the summed
/// estimate drops below abs_tol * max(1, |value|).  Throws NumericError when
/// the panel budget is exhausted first.  An empty interval integrates to 0.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double lo, double hi,
                                    double abs_tol = 1e-12, int max_panels = 2000)
{
    if (!(lo <= hi)) throw std::invalid_argument("integrate_adaptive: requires lo <= hi");
    if (lo == hi) return {0.0, 0.0, 0};

    std::priority_queue<detail::Panel> heap;
    heap.push(detail::gauss_kronrod15(f, lo, hi));
    double total = heap.top().value;
    double total_err = heap.top().error;
    double roundoff_err = 0.0;  // error from panels too small to split further
    int panels = 1;

    auto done = [&] {
        return total_err + roundoff_err <= abs_tol * std::max(1.0, std::abs(total));
    };
    while (!done()) {
        if (heap.empty()) break;
        if (panels >= max_panels) {
            std::ostringstream msg;
            msg << "integrate_adaptive: tolerance " << abs_tol << " not reached on [" << lo
                << ", " << hi << "], achieved " << (total_err + roundoff_err);
            throw NumericError(msg.str(), total_err + roundoff_err);
        }
        const detail::Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            total_err -= worst.error;
            roundoff_err += worst.error;
            continue;
        }
        const detail::Panel left = detail::gauss_kronrod15(f, worst.lo, mid);
        const detail::Panel right = detail::gauss_kronrod15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    // Re-sum panel values so the result does not carry incremental drift.
    double sum = 0.0;
    double err = roundoff_err;
    std::vector<detail::Panel> rest;
    rest.reserve(heap.size());
    while (!heap.empty()) {
        rest.push_back(heap.top());
        heap.pop();
    }
    std::sort(rest.begin(), rest.end(),
              [](const detail::Panel& x, const detail::Panel& y) { return x.lo < y.lo; });
    for (const auto& p : rest) {
        sum += p.value;
        err += p.error;
    }
    if (!done() && err > abs_tol * std::max(1.0, std::abs(sum))) {
        throw NumericError("integrate_adaptive: panels exhausted at roundoff level", err);
    }
    return {sum, err, panels};
}

}  // namespace knotopt
