#include "knotopt/pl_approx.hpp"

#include "knotopt/parallel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace knotopt {

KnotVector::KnotVector(double a, double b, std::vector<double> interior)
    : a_(a), b_(b), interior_(std::move(interior))
{
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::invalid_argument("KnotVector: need finite a < b");
    double prev = a;
    for (std::size_t i = 0; i < interior_.size(); ++i) {
        const double x = interior_[i];
        if (!std::isfinite(x) || x < prev || x > b) {
            std::ostringstream msg;
            msg << "KnotVector: knot " << i + 1 << " = " << x << " breaks a <= x_1 <= ... <= b";
            throw std::invalid_argument(msg.str());
        }
        prev = x;
    }
}

KnotVector KnotVector::equally_spaced(double a, double b, int n)
{
    if (n < 0) throw std::invalid_argument("KnotVector: negative knot count");
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double step = (b - a) / (n + 1);
    for (int i = 0; i < n; ++i) xs[i] = a + (i + 1) * step;
    return KnotVector(a, b, std::move(xs));
}

std::vector<double> KnotVector::points() const
{
    std::vector<double> pts;
    pts.reserve(interior_.size() + 2);
    pts.push_back(a_);
    pts.insert(pts.end(), interior_.begin(), interior_.end());
    pts.push_back(b_);
    return pts;
}

double PLApprox::operator()(double x) const
{
    for (const auto& seg : segments) {
        if (seg.degenerate()) continue;
        if (x >= seg.lo && x <= seg.hi) return seg.slope * x + seg.intercept;
    }
    throw std::out_of_range("PLApprox: x outside the approximation interval");
}

PLApprox build_pl(const Curve& curve, const KnotVector& knots)
{
    const auto pts = knots.points();
    PLApprox pl;
    pl.segments.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i];
        const double hi = pts[i + 1];
        Segment seg{0.0, 0.0, lo, hi};
        if (lo < hi) {
            const double flo = curve.eval(lo);
            const double fhi = curve.eval(hi);
            seg.slope = (fhi - flo) / (hi - lo);
            seg.intercept = (hi * flo - lo * fhi) / (hi - lo);
        }
        pl.segments.push_back(seg);
    }
    return pl;
}

std::vector<double> segment_gaps(const Curve& curve, const KnotVector& knots)
{
    const auto pts = knots.points();
    return segment_gaps_auto(curve, pts);
}

double error_concave(const Curve& curve, const KnotVector& knots)
{
    const auto gaps = segment_gaps(curve, knots);
    return ordered_sum(gaps);
}

double error_general(const Curve& curve, const KnotVector& knots, SegmentSpan span)
{
    const auto gaps = segment_gaps(curve, knots);
    std::span<const double> view(gaps);
    if (span == SegmentSpan::Interior) {
        if (gaps.size() <= 2) return 0.0;
        view = view.subspan(1, gaps.size() - 2);
    }
    return ordered_sum_of_squares(view);
}

}  // namespace knotopt
