#pragma once

#include "knotopt/curve.hpp"
#include "knotopt/pl_approx.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace knotopt {

/// ConcaveArea minimizes the negated trapezoid area phi (equivalent to the
/// area gap for concave curves); GeneralSquared minimizes the sum of squared
/// segment gaps.
enum class ObjectiveKind { ConcaveArea, GeneralSquared };

std::string_view to_string(ObjectiveKind kind);

// --- x-space -------------------------------------------------------------

/// phi(x) = -1/2 * sum_i (x_{i+1} - x_i)(f(x_{i+1}) + f(x_i)).
double phi(const Curve& curve, const KnotVector& knots);

/// d phi / d x_i = 1/2 [f(x_{i+1}) - f(x_{i-1}) + f'(x_i)(x_{i-1} - x_{i+1})].
std::vector<double> grad_phi(const Curve& curve, const KnotVector& knots);

/// Squared signed gap of one segment; 0 when lo == hi.
double psi(const Curve& curve, double lo, double hi);

struct PsiPartials {
    double d_lo = 0.0;
    double d_hi = 0.0;
};

/// Analytic partials of psi.  With g the signed gap and h = hi - lo:
///   d psi / d lo = g (f(hi) - f(lo) - f'(lo) h)
///   d psi / d hi = g (f(hi) - f(lo) - f'(hi) h)
PsiPartials psi_partials(const Curve& curve, double lo, double hi);

/// phi for ConcaveArea, error_general for GeneralSquared.
double objective(const Curve& curve, const KnotVector& knots, ObjectiveKind kind);
std::vector<double> objective_gradient(const Curve& curve, const KnotVector& knots,
                                       ObjectiveKind kind);

// --- y-space -------------------------------------------------------------
//
// y_i = (x_i - a) / (b - x_i),  x_i = b - (b - a) / (1 + y_i).
// Ordered knots in [a, b) map onto the cone 0 <= y_1 <= ... <= y_n.

/// Distance kept from b so y stays finite: delta = 1e-12 (b - a).
double y_guard(double a, double b) noexcept;
/// Largest admissible y, the image of b - delta.
double y_max(double a, double b) noexcept;

/// Throws std::domain_error if some x_i > b - delta.
std::vector<double> to_y(const KnotVector& knots);
/// Clamps knots to b - delta first; never throws for valid knot vectors.
std::vector<double> to_y_clamped(const KnotVector& knots);
/// y entries are capped at y_max.  Throws std::invalid_argument for negative
/// or non-finite y.
KnotVector from_y(std::span<const double> y, double a, double b);

double big_phi(const Curve& curve, double a, double b, std::span<const double> y,
               ObjectiveKind kind);
/// Chain rule: dPhi/dy_i = dF/dx_i * (b - a) / (1 + y_i)^2.
std::vector<double> grad_big_phi(const Curve& curve, double a, double b,
                                 std::span<const double> y, ObjectiveKind kind);

}  // namespace knotopt
