#include "dtnlab/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dtnlab::numerics {

namespace {

constexpr double kPoleDistance = 1e-10;   // |f/f'| below this flags a pole
constexpr double kRescale = 1e250;

void check_order(int n, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": order must be >= 0");
    if (n > kMaxBesselOrder)
        throw std::invalid_argument(std::string(who) + ": order " + std::to_string(n) +
                                    " exceeds supported maximum " + std::to_string(kMaxBesselOrder));
}

int miller_start_order(int n, double x) {
    const int xi = static_cast<int>(std::ceil(x));
    int m = std::max(n, xi) + 20 +
            static_cast<int>(12.0 * std::cbrt(static_cast<double>(std::max(xi, 1))));
    if (m % 2) ++m;  // even start so the normalization sum starts on an even order
    return m;
}

}  // namespace

double bessel_j(int n, double x) {
    check_order(n, "bessel_j");
    if (!(x >= 0.0)) throw std::invalid_argument("bessel_j: x must be >= 0");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;

    const int start = miller_start_order(n, x);
    double fnext = 0.0;     // f_{m+1}
    double f = 1e-30;       // f_m, arbitrary seed at m = start
    double sum = 2.0 * f;   // start is even
    double jn = 0.0;
    for (int m = start; m >= 1; --m) {
        const double fprev = (2.0 * m / x) * f - fnext;
        fnext = f;
        f = fprev;  // f_{m-1}
        const int order = m - 1;
        if (order == n) jn = f;
        if (order >= 2 && order % 2 == 0) sum += 2.0 * f;
        if (std::abs(f) > kRescale) {
            f /= kRescale;
            fnext /= kRescale;
            sum /= kRescale;
            jn /= kRescale;
        }
    }
    sum += f;  // f_0
    return jn / sum;
}

Ratio bessel_j_ratio(int n, double x) {
    check_order(n, "bessel_j_ratio");
    if (!(x > 0.0)) throw std::invalid_argument("bessel_j_ratio: x must be > 0");

    // r = J_{n+1}/J_n = 1/(b_1 - 1/(b_2 - ...)), b_k = 2(n+k)/x.  Modified Lentz.
    const double tiny = 1e-300;
    double f = tiny;
    double C = f;
    double D = 0.0;
    const int max_iter = 200000;
    bool converged = false;
    for (int k = 1; k <= max_iter; ++k) {
        const double b = 2.0 * (n + k) / x;
        const double a = (k == 1) ? 1.0 : -1.0;
        D = b + a * D;
        if (D == 0.0) D = tiny;
        C = b + a / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-15) {
            converged = true;
            break;
        }
    }
    if (!converged) throw std::runtime_error("bessel_j_ratio: continued fraction failed to converge");

    Ratio out;
    out.value = static_cast<double>(n) / x - f;  // J_n' = (n/x) J_n - J_{n+1}
    out.pole = std::abs(out.value) > 1.0 / kPoleDistance;
    return out;
}

double bessel_i(int n, double x) {
    check_order(n, "bessel_i");
    if (!(x >= 0.0)) throw std::invalid_argument("bessel_i: x must be >= 0");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x > 700.0) throw std::overflow_error("bessel_i: x too large (exp overflow)");

    // All-positive ascending series; first term via logs to dodge overflow in n!.
    double term = std::exp(n * std::log(0.5 * x) - std::lgamma(n + 1.0));
    double sum = term;
    const double q = 0.25 * x * x;
    for (int k = 1; k <= 10000; ++k) {
        term *= q / (static_cast<double>(k) * (n + k));
        sum += term;
        if (term < sum * 1e-17) return sum;
    }
    throw std::runtime_error("bessel_i: series failed to converge");
}

double bessel_i_ratio(int n, double x) {
    check_order(n, "bessel_i_ratio");
    if (!(x > 0.0)) throw std::invalid_argument("bessel_i_ratio: x must be > 0");

    // t = I_{n+1}/I_n = 1/(b_1 + 1/(b_2 + ...)), b_k = 2(n+k)/x.
    const double tiny = 1e-300;
    double f = tiny;
    double C = f;
    double D = 0.0;
    for (int k = 1; k <= 200000; ++k) {
        const double b = 2.0 * (n + k) / x;
        D = b + D;
        if (D == 0.0) D = tiny;
        C = b + 1.0 / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-15) return static_cast<double>(n) / x + f;
    }
    throw std::runtime_error("bessel_i_ratio: continued fraction failed to converge");
}

double spherical_j(int l, double x) {
    check_order(l, "spherical_j");
    if (!(x > 0.0)) throw std::invalid_argument("spherical_j: x must be > 0");

    const double j0 = std::sin(x) / x;
    if (l == 0) return j0;
    const double j1 = j0 / x - std::cos(x) / x;
    if (l == 1) return j1;

    const int start = miller_start_order(l, x);
    double fnext = 0.0;
    double f = 1e-30;
    double fl = 0.0;
    double f1 = 0.0;
    for (int m = start; m >= 1; --m) {
        const double fprev = ((2.0 * m + 1.0) / x) * f - fnext;
        fnext = f;
        f = fprev;
        const int order = m - 1;
        if (order == l) fl = f;
        if (order == 1) f1 = f;
        if (std::abs(f) > kRescale) {
            f /= kRescale;
            fnext /= kRescale;
            fl /= kRescale;
            f1 /= kRescale;
        }
    }
    // f now holds the unnormalized order-0 value; pick the better anchor.
    const double f0 = f;
    if (std::abs(f0) >= std::abs(f1)) return fl * (j0 / f0);
    return fl * (j1 / f1);
}

Ratio spherical_j_ratio(int l, double x) {
    check_order(l, "spherical_j_ratio");
    if (!(x > 0.0)) throw std::invalid_argument("spherical_j_ratio: x must be > 0");

    Ratio out;
    if (l == 0) {
        out.value = std::cos(x) / std::sin(x) - 1.0 / x;  // j_0'/j_0 = cot x - 1/x
        out.pole = std::abs(out.value) > 1.0 / kPoleDistance || std::sin(x) == 0.0;
        return out;
    }
    // s_l = j_l/j_{l-1} = 1/(b_1 - 1/(b_2 - ...)), b_k = (2(l+k)-1)/x;
    // then j_l'/j_l = 1/s_l - (l+1)/x.
    const double tiny = 1e-300;
    double f = tiny;
    double C = f;
    double D = 0.0;
    bool converged = false;
    for (int k = 1; k <= 200000; ++k) {
        const double b = (2.0 * (l + k) - 1.0) / x;
        const double a = (k == 1) ? 1.0 : -1.0;
        D = b + a * D;
        if (D == 0.0) D = tiny;
        C = b + a / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-15) {
            converged = true;
            break;
        }
    }
    if (!converged) throw std::runtime_error("spherical_j_ratio: continued fraction failed to converge");
    out.value = 1.0 / f - (l + 1.0) / x;
    out.pole = std::abs(out.value) > 1.0 / kPoleDistance;
    return out;
}

double spherical_i_ratio(int l, double x) {
    check_order(l, "spherical_i_ratio");
    if (!(x > 0.0)) throw std::invalid_argument("spherical_i_ratio: x must be > 0");

    // i_l'/i_l = l/x + i_{l+1}/i_l with i_{l+1}/i_l = 1/(b_1 + 1/(b_2 + ...)),
    // b_k = (2(l+k)+1)/x.
    const double tiny = 1e-300;
    double f = tiny;
    double C = f;
    double D = 0.0;
    for (int k = 1; k <= 200000; ++k) {
        const double b = (2.0 * (l + k) + 1.0) / x;
        D = b + D;
        if (D == 0.0) D = tiny;
        C = b + 1.0 / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-15) return static_cast<double>(l) / x + f;
    }
    throw std::runtime_error("spherical_i_ratio: continued fraction failed to converge");
}

}  // namespace dtnlab::numerics
