#pragma once

#include <complex>
#include <optional>

#include "dtnlab/tolerance.hpp"

namespace dtnlab::halfline {

// Parameters of the half-line model operator T_a = -h^2 d^2/dx^2 on (0, inf)
// with boundary condition (h d/dx + a) u(0) = 0.  The tangential energy
// |xi'|^2 only shifts the spectral variable: sigma = |xi'|^2 + eta^2.
struct Params {
    double a = 0.0;
    double h = 1.0;
    double xi_prime_sq = 0.0;
    std::complex<double> eta{0.0, 1.0};
};

struct KernelValue {
    std::complex<double> value{0.0, 0.0};
    bool pole = false;  // i*eta + a (or its mirror) nearly vanished
};

// Green kernel of (T_a - eta^2)^{-1} at (x, y), x, y >= 0.  Requires
// Re eta >= 0 and Im eta != 0; the lower half-plane value is the complex
// conjugate at the conjugated eta.
KernelValue resolvent_kernel(const Params& p, double x, double y);

// Density of the absolutely continuous part of dE_{T_a} with respect to
// d eta (tau = eta^2, eta > 0), real by construction:
//   (1/(pi h)) * ( cos(eta (x-y)/h) + Re[ z(eta) e^{i eta (x+y)/h} ] ),
// z = (i eta - a)/(i eta + a).
double spectral_measure_density(const Params& p, double x, double y, double eta);

// The single bound state, present only for a > 0: energy -a^2, profile
// sqrt(2a/h) e^{-a x / h}.
struct BoundState {
    double energy = 0.0;
    double amplitude = 0.0;   // profile value at x = 0
    double decay_rate = 0.0;  // a/h
    double profile(double x) const;
};
std::optional<BoundState> bound_state(double a, double h);

// Diagonal of the half-space spectral projector at energy 1, distance x1
// from the wall, after the tangential integral has been carried out.
double projector_diagonal(double a, double h, int d, double x1, numerics::Tolerance tol = {});

// kappa(a) recomputed by integrating (projector diagonal - bulk density)
// across the boundary layer, with exponential damping e^{-eps t} and
// Richardson extrapolation over {eps, eps/2, eps/4}.  Independent of the
// eta +- i0 evaluation used by the kappa module.
struct BoundaryLayerResult {
    double kappa = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};
BoundaryLayerResult kappa_from_boundary_layer(double a, int d, double eps = 0.05);

}  // namespace dtnlab::halfline
