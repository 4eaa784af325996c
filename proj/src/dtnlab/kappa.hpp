#pragma once

#include "dtnlab/tolerance.hpp"

namespace dtnlab::kappa {

enum class Method { quadrature, closed_form_d3, halfline_oracle };

struct KappaValue {
    double a = 0.0;
    int d = 0;
    double value = 0.0;
    Method method = Method::quadrature;
};

// Volume of the unit ball in R^d (omega_d); d >= 0.
double unit_ball_volume(int d);

// omega_{d-1} / (2*pi)^{d-1}, the prefactor shared by every kappa formula.
double prefactor(int d);

// arccot with range (0, pi).
double arccot(double a);

// Cayley angle of a boundary eigenvalue: e^{i theta} = (a - i)/(a + i),
// theta(a) = pi + 2*arctan(a) in (0, 2pi).  a = -inf maps to the limit 0.
double theta_from_a(double a);

// Inverse map, a = -cot(theta/2) for theta in (0, 2pi).
double a_from_theta(double theta);

// Two-term Weyl coefficient by adaptive quadrature of the eta-integral with
// the a/(a^2+eta^2) singularity split off in closed form.  a may be -inf
// (Dirichlet limit) and a = 0 returns the two-sided limit prefactor/4.
KappaValue kappa_quadrature(double a, int d, numerics::Tolerance tol = {});

// Exact d=3 expression; total on [-inf, +inf) with +inf diverging.
KappaValue kappa_closed_form_d3(double a);

// kappa on the circle: closed form for d=3, composition with the Cayley map
// otherwise.
double kappa_tilde(double theta, int d, numerics::Tolerance tol = {});

// The two pieces of kappa that are separately discontinuous at a = 0.
struct JumpParts {
    double integral_term = 0.0;   // prefactor * (-1/(2pi)) * integral
    double heaviside_term = 0.0;  // prefactor * H(a) * (1+a^2)^{(d-1)/2}
};
JumpParts jump_decomposition(double a, int d, numerics::Tolerance tol = {});

}  // namespace dtnlab::kappa
