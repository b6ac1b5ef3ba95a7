#pragma once

#include "knotopt/curve.hpp"

#include <span>
#include <vector>

namespace knotopt {

/// Interval [a, b] plus n ordered interior knots a <= x_1 <= ... <= x_n <= b.
/// Coincident knots are allowed.
class KnotVector {
public:
    /// Throws std::invalid_argument unless a < b and the knots are ordered
    /// within [a, b].
    KnotVector(double a, double b, std::vector<double> interior);

    static KnotVector equally_spaced(double a, double b, int n);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    int n() const noexcept { return static_cast<int>(interior_.size()); }
    const std::vector<double>& interior() const noexcept { return interior_; }

    /// x_0 = a, x_1..x_n, x_{n+1} = b.
    std::vector<double> points() const;
    double point(int i) const { return i == 0 ? a_ : (i == n() + 1 ? b_ : interior_[i - 1]); }

private:
    double a_;
    double b_;
    std::vector<double> interior_;
};

struct Segment {
    double slope = 0.0;      // alpha_i
    double intercept = 0.0;  // beta_i
    double lo = 0.0;
    double hi = 0.0;
    bool degenerate() const noexcept { return !(lo < hi); }
};

/// Piecewise-linear interpolant through (x_i, f(x_i)).
struct PLApprox {
    std::vector<Segment> segments;

    /// Evaluates on the first non-degenerate segment containing x.  Throws
    /// std::out_of_range outside [lo, hi] of the whole approximation.
    double operator()(double x) const;
};

PLApprox build_pl(const Curve& curve, const KnotVector& knots);

/// Which segments an error measure sums over.  All is the measure as
/// defined; Interior drops the two boundary segments [a, x_1] and [x_n, b]
/// (the convention that regenerates published "orig error" tables).
enum class SegmentSpan { All, Interior };

/// Signed gap per segment: integral of f minus its trapezoid.  Degenerate
/// segments give exactly 0.  Size n + 1.
std::vector<double> segment_gaps(const Curve& curve, const KnotVector& knots);

/// Integral of f over [a, b] minus the area under the PL interpolant.
double error_concave(const Curve& curve, const KnotVector& knots);

/// Sum of squared segment gaps.
double error_general(const Curve& curve, const KnotVector& knots,
                     SegmentSpan span = SegmentSpan::All);

}  // namespace knotopt
