#include "knotopt/curve.hpp"

#include "knotopt/quadrature.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace knotopt {

namespace {

bool is_integer(double p) { return std::isfinite(p) && std::floor(p) == p; }

// Real power that refuses to wander into the complex plane.
double real_pow(double base, double p, const char* family)
{
    if (base < 0.0 && !is_integer(p)) {
        std::ostringstream msg;
        msg << family << ": negative base " << base << " raised to fractional power " << p;
        throw std::domain_error(msg.str());
    }
    if (base == 0.0 && p < 0.0) {
        std::ostringstream msg;
        msg << family << ": zero raised to negative power " << p;
        throw std::domain_error(msg.str());
    }
    return std::pow(base, p);
}

double checked(double value, const char* family, double x)
{
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << family << ": non-finite value at x = " << x;
        throw std::domain_error(msg.str());
    }
    return value;
}

std::string lower(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::string_view to_string(CurveFamily family)
{
    switch (family) {
    case CurveFamily::Logistic: return "Logistic";
    case CurveFamily::Gompertz: return "Gompertz";
    case CurveFamily::Weibull: return "Weibull";
    case CurveFamily::Arctan: return "Arctan";
    case CurveFamily::Algebraic: return "Algebraic";
    case CurveFamily::Quadratic: return "Quadratic";
    }
    return "?";
}

CurveFamily parse_family(std::string_view text)
{
    const std::string key = lower(text);
    if (key == "logistic") return CurveFamily::Logistic;
    if (key == "gompertz") return CurveFamily::Gompertz;
    if (key == "weibull") return CurveFamily::Weibull;
    if (key == "arctan" || key == "arctangent") return CurveFamily::Arctan;
    if (key == "algebraic") return CurveFamily::Algebraic;
    if (key == "quadratic") return CurveFamily::Quadratic;
    throw std::invalid_argument("unknown curve family '" + std::string(text) + "'");
}

Curve::Curve(CurveFamily family, double v1, double v2, std::optional<double> s, double d1,
             double d2)
    : family_(family), v1_(v1), v2_(v2), s_(s), d1_(d1), d2_(d2)
{
    if (family == CurveFamily::Arctan) {
        if (s) throw std::invalid_argument("Arctan curves take no shape parameter s");
    } else if (family != CurveFamily::Quadratic) {
        if (!s) throw std::invalid_argument(std::string(to_string(family)) + " requires s");
        if (*s == 0.0) throw std::invalid_argument("shape parameter s must be nonzero");
    }
    if (!std::isfinite(v1) || !std::isfinite(v2) || !std::isfinite(d1) || !std::isfinite(d2) ||
        (s && !std::isfinite(*s)))
        throw std::invalid_argument("curve parameters must be finite");
}

Curve Curve::logistic(double v1, double v2, double s, double d1, double d2)
{
    return Curve(CurveFamily::Logistic, v1, v2, s, d1, d2);
}
Curve Curve::gompertz(double v1, double v2, double s, double d1, double d2)
{
    return Curve(CurveFamily::Gompertz, v1, v2, s, d1, d2);
}
Curve Curve::weibull(double v1, double v2, double s, double d1, double d2)
{
    return Curve(CurveFamily::Weibull, v1, v2, s, d1, d2);
}
Curve Curve::arctan(double v1, double v2, double d1, double d2)
{
    return Curve(CurveFamily::Arctan, v1, v2, std::nullopt, d1, d2);
}
Curve Curve::algebraic(double v1, double v2, double s, double d1, double d2)
{
    return Curve(CurveFamily::Algebraic, v1, v2, s, d1, d2);
}
// Quadratic reuses the parameter slots: v1 = c0, v2 = c1, d1 = c2.
Curve Curve::quadratic(double c2, double c1, double c0)
{
    return Curve(CurveFamily::Quadratic, c0, c1, std::nullopt, c2, 0.0);
}

double Curve::eval(double x) const
{
    const double u = d1_ * x + d2_;
    switch (family_) {
    case CurveFamily::Logistic: {
        const double s = *s_;
        const double q = 1.0 + s * std::exp(u);
        return checked(v1_ + v2_ * real_pow(q, -1.0 / s, "Logistic"), "Logistic", x);
    }
    case CurveFamily::Gompertz:
        return checked(v1_ + v2_ * std::exp(*s_ * std::exp(u)), "Gompertz", x);
    case CurveFamily::Weibull:
        return checked(v1_ + v2_ * std::exp(-real_pow(u, *s_, "Weibull")), "Weibull", x);
    case CurveFamily::Arctan:
        return v1_ + v2_ * std::atan(u);
    case CurveFamily::Algebraic: {
        const double s = *s_;
        const double w = d1_ * real_pow(x, s, "Algebraic") + d2_;
        return checked(v1_ + v2_ * real_pow(w, -1.0 / s, "Algebraic"), "Algebraic", x);
    }
    case CurveFamily::Quadratic:
        return (d1_ * x + v2_) * x + v1_;
    }
    throw std::logic_error("unreachable curve family");
}

double Curve::deriv1(double x) const
{
    const double u = d1_ * x + d2_;
    switch (family_) {
    case CurveFamily::Logistic: {
        // f' = -v2 d1 e^u q^(-1/s-1)
        const double s = *s_;
        const double eu = std::exp(u);
        const double q = 1.0 + s * eu;
        return checked(-v2_ * d1_ * eu * real_pow(q, -1.0 / s - 1.0, "Logistic"), "Logistic", x);
    }
    case CurveFamily::Gompertz: {
        const double se = *s_ * std::exp(u);
        return checked(v2_ * std::exp(se) * se * d1_, "Gompertz", x);
    }
    case CurveFamily::Weibull: {
        const double s = *s_;
        const double us = real_pow(u, s, "Weibull");
        return checked(-v2_ * std::exp(-us) * s * real_pow(u, s - 1.0, "Weibull") * d1_,
                       "Weibull", x);
    }
    case CurveFamily::Arctan:
        return v2_ * d1_ / (1.0 + u * u);
    case CurveFamily::Algebraic: {
        // f' = -v2 d1 x^(s-1) w^(-1/s-1)
        const double s = *s_;
        const double w = d1_ * real_pow(x, s, "Algebraic") + d2_;
        return checked(-v2_ * d1_ * real_pow(x, s - 1.0, "Algebraic") *
                           real_pow(w, -1.0 / s - 1.0, "Algebraic"),
                       "Algebraic", x);
    }
    case CurveFamily::Quadratic:
        return 2.0 * d1_ * x + v2_;
    }
    throw std::logic_error("unreachable curve family");
}

double Curve::deriv2(double x) const
{
    const double u = d1_ * x + d2_;
    switch (family_) {
    case CurveFamily::Logistic: {
        // f'' = -v2 d1^2 e^u q^(-1/s-2) (1 - e^u)
        const double s = *s_;
        const double eu = std::exp(u);
        const double q = 1.0 + s * eu;
        return checked(-v2_ * d1_ * d1_ * eu * real_pow(q, -1.0 / s - 2.0, "Logistic") * (1.0 - eu),
                       "Logistic", x);
    }
    case CurveFamily::Gompertz: {
        const double se = *s_ * std::exp(u);
        return checked(v2_ * std::exp(se) * se * d1_ * d1_ * (1.0 + se), "Gompertz", x);
    }
    case CurveFamily::Weibull: {
        // f'' = v2 e^(-u^s) d1^2 (s^2 u^(2s-2) - s(s-1) u^(s-2))
        const double s = *s_;
        const double us = real_pow(u, s, "Weibull");
        const double um1 = real_pow(u, s - 1.0, "Weibull");
        const double um2 = (s == 2.0) ? 1.0 : real_pow(u, s - 2.0, "Weibull");
        return checked(v2_ * std::exp(-us) * d1_ * d1_ * (s * s * um1 * um1 - s * (s - 1.0) * um2),
                       "Weibull", x);
    }
    case CurveFamily::Arctan: {
        const double den = 1.0 + u * u;
        return -2.0 * v2_ * d1_ * d1_ * u / (den * den);
    }
    case CurveFamily::Algebraic: {
        // f'' = -v2 d1 [ (s-1) x^(s-2) w^(-1/s-1) - (1+s) d1 x^(2s-2) w^(-1/s-2) ]
        const double s = *s_;
        const double w = d1_ * real_pow(x, s, "Algebraic") + d2_;
        const double xm1 = real_pow(x, s - 1.0, "Algebraic");
        const double xm2 = (s == 2.0) ? 1.0 : real_pow(x, s - 2.0, "Algebraic");
        const double wa = real_pow(w, -1.0 / s - 1.0, "Algebraic");
        return checked(-v2_ * d1_ * ((s - 1.0) * xm2 * wa - (1.0 + s) * d1_ * xm1 * xm1 * wa / w),
                       "Algebraic", x);
    }
    case CurveFamily::Quadratic:
        return 2.0 * d1_;
    }
    throw std::logic_error("unreachable curve family");
}

double integrate(const Curve& curve, double lo, double hi)
{
    return integrate_adaptive([&curve](double x) { return curve.eval(x); }, lo, hi, 1e-12).value;
}

}  // namespace knotopt
