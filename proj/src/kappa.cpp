#include "dtnlab/kappa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dtnlab/quadrature.hpp"

namespace dtnlab::kappa {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_dim(int d) {
    if (d < 2) throw std::invalid_argument("kappa: dimension must be >= 2");
}

// Integral term of the kappa formula,
//   I(a) = int_{-1}^{1} (1-eta^2)^{(d-1)/2} * a/(a^2+eta^2) d eta,
// evaluated as a*Q + 2*sgn(a)*arctan(1/|a|) where the closed-form piece
// absorbs the near-delta spike at eta = 0 and
//   Q = 2*int_0^1 [(1-eta^2)^p - 1]/(a^2+eta^2) d eta
// has an integrand vanishing like eta^2 at the origin.
double integral_term(double a, int d, const numerics::Tolerance& tol) {
    const double p = 0.5 * (d - 1);
    const double a2 = a * a;
    const double q = 2.0 * numerics::integrate_or_throw(
                               [p, a2](double eta) {
                                   const double w = std::pow(1.0 - eta * eta, p) - 1.0;
                                   return w / (a2 + eta * eta);
                               },
                               0.0, 1.0, tol);
    const double sgn = a > 0.0 ? 1.0 : -1.0;
    return a * q + 2.0 * sgn * std::atan(1.0 / std::abs(a));
}

}  // namespace

double unit_ball_volume(int d) {
    if (d < 0) throw std::invalid_argument("unit_ball_volume: d must be >= 0");
    return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double prefactor(int d) {
    check_dim(d);
    return unit_ball_volume(d - 1) / std::pow(2.0 * kPi, d - 1);
}

double arccot(double a) { return 0.5 * kPi - std::atan(a); }

double theta_from_a(double a) {
    if (std::isnan(a)) throw std::invalid_argument("theta_from_a: a is NaN");
    return kPi + 2.0 * std::atan(a);  // atan(-inf) = -pi/2 gives the limit 0
}

double a_from_theta(double theta) {
    if (!(theta > 0.0 && theta < 2.0 * kPi))
        throw std::invalid_argument("a_from_theta: theta must lie in (0, 2pi)");
    return std::tan(0.5 * (theta - kPi));
}

KappaValue kappa_quadrature(double a, int d, numerics::Tolerance tol) {
    check_dim(d);
    if (std::isnan(a)) throw std::invalid_argument("kappa_quadrature: a is NaN");
    const double pref = prefactor(d);
    KappaValue out{a, d, 0.0, Method::quadrature};
    if (std::isinf(a)) {
        if (a > 0.0) throw std::invalid_argument("kappa_quadrature: a = +inf diverges");
        out.value = -0.25 * pref;  // Dirichlet endpoint: the integral term vanishes
        return out;
    }
    if (a == 0.0) {
        out.value = 0.25 * pref;  // two-sided limit (H(0) := 1/2)
        return out;
    }
    const double p = 0.5 * (d - 1);
    const double heav = a > 0.0 ? std::pow(1.0 + a * a, p) : 0.0;
    out.value = pref * (-integral_term(a, d, tol) / (2.0 * kPi) - 0.25 + heav);
    return out;
}

KappaValue kappa_closed_form_d3(double a) {
    if (std::isnan(a)) throw std::invalid_argument("kappa_closed_form_d3: a is NaN");
    KappaValue out{a, 3, 0.0, Method::closed_form_d3};
    if (std::isinf(a)) {
        out.value = a < 0.0 ? -1.0 / (16.0 * kPi) : std::numeric_limits<double>::infinity();
        return out;
    }
    const double one_a2 = 1.0 + a * a;
    out.value = (1.0 / (4.0 * kPi)) *
                (-0.25 - arccot(a) * one_a2 / kPi + one_a2 + a / kPi);
    return out;
}

double kappa_tilde(double theta, int d, numerics::Tolerance tol) {
    check_dim(d);
    if (!(theta > 0.0 && theta < 2.0 * kPi))
        throw std::invalid_argument("kappa_tilde: theta must lie in (0, 2pi)");
    if (d == 3) {
        const double s = std::sin(0.5 * theta);
        return (1.0 / (4.0 * kPi)) *
               (-0.25 + (theta - std::sin(theta)) / (2.0 * kPi * s * s));
    }
    return kappa_quadrature(a_from_theta(theta), d, tol).value;
}

JumpParts jump_decomposition(double a, int d, numerics::Tolerance tol) {
    check_dim(d);
    if (!(std::abs(a) > 0.0 && std::abs(a) <= 1.0))
        throw std::invalid_argument("jump_decomposition: requires 0 < |a| <= 1");
    const double pref = prefactor(d);
    const double p = 0.5 * (d - 1);
    JumpParts out;
    out.integral_term = pref * (-integral_term(a, d, tol) / (2.0 * kPi));
    out.heaviside_term = a > 0.0 ? pref * std::pow(1.0 + a * a, p) : 0.0;
    return out;
}

}  // namespace dtnlab::kappa
