#pragma once

namespace dtnlab::numerics {

inline constexpr int kMaxBesselOrder = 50000;

// Logarithmic-derivative ratios can blow up at zeros of the underlying
// function; `pole` marks arguments within ~1e-10 of such a zero (there the
// DtN branch is undefined: lambda^2 is a Dirichlet eigenvalue).
struct Ratio {
    double value = 0.0;
    bool pole = false;
};

// Cylindrical Bessel J_n, n >= 0, x >= 0.  Backward (Miller) recurrence
// normalized with J_0 + 2*sum_k J_{2k} = 1; absolute floor ~1e-290 deep in
// the evanescent regime n >> x.
double bessel_j(int n, double x);

// J_n'(x)/J_n(x) via the continued fraction for J_{n+1}/J_n (modified Lentz),
// stable arbitrarily close to zeros of J_n.
Ratio bessel_j_ratio(int n, double x);

// Modified Bessel I_n by ascending series (all terms positive); x <= ~700.
double bessel_i(int n, double x);

// I_n'(x)/I_n(x) = n/x + I_{n+1}/I_n, continued fraction; no poles (I_n > 0).
double bessel_i_ratio(int n, double x);

// Spherical Bessel j_l, x > 0.  Downward recurrence normalized against
// j_0 = sin(x)/x (or j_1 when sin(x) is tiny).
double spherical_j(int l, double x);

// j_l'(x)/j_l(x) with pole flag at zeros of j_l.
Ratio spherical_j_ratio(int l, double x);

// i_l'(x)/i_l(x) for the modified spherical branch; no poles.
double spherical_i_ratio(int l, double x);

}  // namespace dtnlab::numerics
