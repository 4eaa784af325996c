#pragma once

// Test-only oracles, deliberately independent of the production algorithms:
// ascending power series in quad precision for the Bessel family, closed
// forms for low dimensions, and brute-force counting helpers.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

inline long double absq(__float128 v) {
    return v < 0 ? static_cast<long double>(-v) : static_cast<long double>(v);
}

// J_n by the ascending series sum_k (-1)^k (x/2)^{n+2k} / (k! (n+k)!),
// summed in __float128 so cancellation up to x ~ 20 still leaves ~20 good
// digits.  Only for small n, x; the production path is recurrence-based.
inline double series_bessel_j(int n, double x) {
    if (n < 0 || x < 0.0) throw std::invalid_argument("series_bessel_j: bad arguments");
    const __float128 half = static_cast<__float128>(x) / 2;
    __float128 term = 1;
    for (int j = 1; j <= n; ++j) term *= half / j;
    __float128 sum = term;
    const __float128 q = half * half;
    for (int k = 1; k < 600; ++k) {
        term *= -q / (static_cast<__float128>(k) * (n + k));
        sum += term;
        if (absq(term) < 1e-40L * (absq(sum) + 1e-30L)) break;
    }
    return static_cast<double>(sum);
}

// I_n series: same with all-positive terms.
inline double series_bessel_i(int n, double x) {
    if (n < 0 || x < 0.0) throw std::invalid_argument("series_bessel_i: bad arguments");
    const __float128 half = static_cast<__float128>(x) / 2;
    __float128 term = 1;
    for (int j = 1; j <= n; ++j) term *= half / j;
    __float128 sum = term;
    const __float128 q = half * half;
    for (int k = 1; k < 600; ++k) {
        term *= q / (static_cast<__float128>(k) * (n + k));
        sum += term;
        if (absq(term) < 1e-40L * absq(sum)) break;
    }
    return static_cast<double>(sum);
}

// Derivative from the series via J_n' = J_{n-1} - (n/x) J_n (n >= 1),
// J_0' = -J_1.
inline double series_bessel_j_derivative(int n, double x) {
    if (n == 0) return -series_bessel_j(1, x);
    return series_bessel_j(n - 1, x) - n / x * series_bessel_j(n, x);
}

// Closed spherical Bessel forms for l <= 2.
inline double closed_spherical_j(int l, double x) {
    switch (l) {
        case 0:
            return std::sin(x) / x;
        case 1:
            return std::sin(x) / (x * x) - std::cos(x) / x;
        case 2:
            return (3.0 / (x * x * x) - 1.0 / x) * std::sin(x) - 3.0 / (x * x) * std::cos(x);
        default:
            throw std::invalid_argument("closed_spherical_j: l <= 2 only");
    }
}

// d = 2 kappa in closed form: the eta-integral evaluates to
// sgn(a) * pi * (sqrt(1+a^2) - |a|).
inline double kappa2_closed(double a) {
    const double pi = 3.14159265358979323846;
    if (a == 0.0) return 1.0 / (4.0 * pi);
    const double s = a > 0.0 ? 1.0 : -1.0;
    const double root = std::sqrt(1.0 + a * a);
    const double heav = a > 0.0 ? root : 0.0;
    return (1.0 / pi) * (-s * (root - std::abs(a)) / 2.0 - 0.25 + heav);
}

// d = 5 eta-integral by partial fractions:
//   (1-eta^2)^2/(a^2+eta^2) = (a^2+eta^2) - 2(1+a^2) + (1+a^2)^2/(a^2+eta^2).
inline double kappa5_integral_closed(double a) {
    const double s = a > 0.0 ? 1.0 : -1.0;
    const double one_a2 = 1.0 + a * a;
    return -2.0 * a * a * a - 10.0 / 3.0 * a +
           2.0 * s * one_a2 * one_a2 * std::atan(1.0 / std::abs(a));
}

// Plain bisection used to pin roots independently of the production scanner.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    if (flo * f(hi) > 0.0) throw std::invalid_argument("bisect: endpoints do not bracket");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// Neumann / Dirichlet rectangle lattice counts of eigenvalues of -Delta
// strictly below `bound` (Neumann includes m = 0 indices).
inline long long rectangle_lattice_count(double l1, double l2, double bound, bool dirichlet) {
    const double pi = 3.14159265358979323846;
    long long total = 0;
    for (long m1 = dirichlet ? 1 : 0;; ++m1) {
        const double e1 = pi * pi * m1 * m1 / (l1 * l1);
        if (e1 >= bound) break;
        for (long m2 = dirichlet ? 1 : 0;; ++m2) {
            const double e2 = pi * pi * m2 * m2 / (l2 * l2);
            if (e1 + e2 >= bound) break;
            ++total;
        }
    }
    return total;
}

}  // namespace oracle
