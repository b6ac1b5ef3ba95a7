#pragma once

#include "knotopt/curve.hpp"
#include "knotopt/objective.hpp"
#include "knotopt/pl_approx.hpp"

#include <string>
#include <vector>

namespace knotopt {

/// Gap x_{i+1} - x_i at or below this is treated as a binding constraint.
inline constexpr double kBindingGap = 1e-8;
/// Stationarity residual accepted as a KKT point by prop1_test.
inline constexpr double kKktTolerance = 1e-6;

/// Symmetric tridiagonal matrix: diag has n entries, off has n - 1.
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    /// Dense row-major copy, n * n.
    std::vector<double> dense() const;
};

struct Prop1Result {
    bool holds = false;
    /// Right side minus left side for i = 1..n-1 (empty when n = 1).
    std::vector<double> margins;
};

struct KktReport {
    ObjectiveKind kind = ObjectiveKind::ConcaveArea;
    std::vector<double> lambda;               // lambda_0..lambda_n
    std::vector<double> gradient;             // true objective gradient
    double stationarity_residual = 0.0;       // max |row| over unused stationarity rows
    double complementarity_residual = 0.0;    // max |min(gap_i, lambda_i)|
    bool strictly_interior = false;
    Tridiagonal hessian;                      // ConcaveArea only
    bool prop1_holds = false;                 // ConcaveArea only
    std::vector<double> prop1_margins;
};

/// Stationarity rows are grad_i - lambda_{i-1} + lambda_i = 0 with
/// lambda_i the multiplier of x_{i+1} - x_i >= 0.  Strictly ordered interior
/// knots give lambda = 0 and residual = max |grad|.  Clusters of binding
/// gaps are resolved by substitution from the free side of the cluster.
KktReport kkt_check(const Curve& curve, const KnotVector& knots, ObjectiveKind kind);

/// Diagonal (x_{i-1} - x_{i+1}) f''(x_i), off-diagonal f'(x_{i+1}) - f'(x_i).
/// This is twice the Hessian of phi.
Tridiagonal hessian_phi(const Curve& curve, const KnotVector& knots);

/// Sufficient condition for a local minimum of phi, checked for
/// i = 1..n-1 (the i = n term would need x_{n+2}).  holds requires every
/// diagonal entry and every margin to be strictly positive.
/// Throws std::invalid_argument unless the phi stationarity residual is
/// within `tolerance`.
Prop1Result prop1_test(const Curve& curve, const KnotVector& knots,
                       double tolerance = kKktTolerance);

std::string to_json(const KktReport& report, int indent = 2);

}  // namespace knotopt
