#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace knotopt {

enum class CurveFamily { Logistic, Gompertz, Weibull, Arctan, Algebraic, Quadratic };

std::string_view to_string(CurveFamily family);
/// Accepts the catalog spellings ("Logistic", "Gompertz", ...), case-insensitive.
CurveFamily parse_family(std::string_view text);

/// A smooth univariate curve from one of the parametric families.
///
/// With u = d1*x + d2:
///   Logistic   v1 + v2 / (1 + s*e^u)^(1/s)
///   Gompertz   v1 + v2 * e^(s*e^u)
///   Weibull    v1 + v2 * e^(-u^s)
///   Arctan     v1 + v2 * atan(u)            (no shape parameter)
///   Algebraic  v1 + v2 / (d1*x^s + d2)^(1/s)
///
/// Quadratic (c2*x^2 + c1*x + c0) is an analysis hook with closed-form
/// behaviour; it is not part of the experiment catalog.
///
/// Values are immutable after construction.
class Curve {
public:
    /// Throws std::invalid_argument when the shape parameter is missing for a
    /// family that needs it, or present for Arctan.
    Curve(CurveFamily family, double v1, double v2, std::optional<double> s, double d1,
          double d2);

    static Curve logistic(double v1, double v2, double s, double d1, double d2);
    static Curve gompertz(double v1, double v2, double s, double d1, double d2);
    static Curve weibull(double v1, double v2, double s, double d1, double d2);
    static Curve arctan(double v1, double v2, double d1, double d2);
    static Curve algebraic(double v1, double v2, double s, double d1, double d2);
    static Curve quadratic(double c2, double c1, double c0);

    CurveFamily family() const noexcept { return family_; }
    double v1() const noexcept { return v1_; }
    double v2() const noexcept { return v2_; }
    std::optional<double> s() const noexcept { return s_; }
    double d1() const noexcept { return d1_; }
    double d2() const noexcept { return d2_; }

    /// f(x).  Throws std::domain_error where the family formula is undefined
    /// or not finite.
    double eval(double x) const;
    double deriv1(double x) const;
    double deriv2(double x) const;

    double operator()(double x) const { return eval(x); }

private:
    Curve() = default;

    CurveFamily family_ = CurveFamily::Quadratic;
    double v1_ = 0.0;
    double v2_ = 0.0;
    std::optional<double> s_;
    double d1_ = 0.0;
    double d2_ = 0.0;
};

/// Definite integral of the curve over [lo, hi] by adaptive Gauss-Kronrod,
/// absolute error <= 1e-12 * max(1, |result|).  integrate(c, t, t) == 0.
/// Throws NumericError on non-convergence, std::invalid_argument if lo > hi.
double integrate(const Curve& curve, double lo, double hi);

}  // namespace knotopt
