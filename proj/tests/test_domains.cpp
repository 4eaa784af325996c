#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "dtnlab/domains.hpp"
#include "oracles.hpp"

using namespace dtnlab::domains;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Independent 1D Robin oracle via the even/odd decomposition about L/2:
// even modes solve  h k sin(kL/2) + a cos(kL/2) = 0,
// odd modes solve   h k cos(kL/2) - a sin(kL/2) = 0,
// trapped modes     tanh(kappa L/2) = a/(h kappa)  (even),
//                   tanh(kappa L/2) = h kappa / a  (odd, iff aL > 2h).
std::vector<double> oracle_robin_1d(double a, double h, double L, double mu_max) {
    std::vector<double> mus;
    auto scan_collect = [&](auto&& f, double k_hi) {
        const int n = static_cast<int>(std::ceil(k_hi * L)) * 200 + 200;
        double prev = f(k_hi * 1e-10);
        double xprev = k_hi * 1e-10;
        for (int i = 1; i <= n; ++i) {
            const double x = k_hi * static_cast<double>(i) / n;
            const double cur = f(x);
            if (prev * cur < 0.0)
                mus.push_back(std::pow(h * oracle::bisect(f, xprev, x), 2));
            prev = cur;
            xprev = x;
        }
    };
    if (mu_max > 0.0) {
        const double K = std::sqrt(mu_max) / h;
        scan_collect([&](double k) { return h * k * std::sin(0.5 * k * L) + a * std::cos(0.5 * k * L); },
                     K);
        scan_collect([&](double k) { return h * k * std::cos(0.5 * k * L) - a * std::sin(0.5 * k * L); },
                     K);
    }
    if (a > 0.0) {
        auto even = [&](double k) { return std::tanh(0.5 * k * L) - a / (h * k); };
        double hi = 2.0 * a / h;
        while (even(hi) <= 0.0) hi *= 2.0;
        const double ke = oracle::bisect(even, a / h, hi);
        if (-(h * ke) * (h * ke) < mu_max) mus.push_back(-(h * ke) * (h * ke));
        if (a * L > 2.0 * h * (1.0 + 1e-12)) {
            auto odd = [&](double k) { return std::tanh(0.5 * k * L) - h * k / a; };
            const double ko = oracle::bisect(odd, 1e-9 * a / h, a / h);
            if (-(h * ko) * (h * ko) < mu_max) mus.push_back(-(h * ko) * (h * ko));
        }
    }
    if ((a == 0.0 || std::abs(a * L - 2.0 * h) < 1e-12) && 0.0 < mu_max) mus.push_back(0.0);
    std::sort(mus.begin(), mus.end());
    // The even/odd scans can each rediscover k = 0-adjacent artifacts; dedupe.
    mus.erase(std::unique(mus.begin(), mus.end(),
                          [](double x, double y) { return std::abs(x - y) < 1e-9; }),
              mus.end());
    return mus;
}
}  // namespace

TEST_CASE("model domain metadata") {
    const auto disk = ModelDomain::disk(2.0);
    CHECK(disk.dim() == 2);
    CHECK(rel_err(disk.volume(), kPi * 4.0) < 1e-15);
    CHECK(rel_err(disk.boundary_volume(), 4.0 * kPi) < 1e-15);

    const auto ball = ModelDomain::ball(1.5);
    CHECK(ball.dim() == 3);
    CHECK(rel_err(ball.volume(), 4.0 / 3.0 * kPi * std::pow(1.5, 3)) < 1e-15);
    CHECK(rel_err(ball.boundary_volume(), 4.0 * kPi * 2.25) < 1e-15);

    const auto rect = ModelDomain::rectangle(1.0, 2.0);
    CHECK(rect.volume() == 2.0);
    CHECK(rect.boundary_volume() == 6.0);
    CHECK_FALSE(rect.supports_dtn());

    const auto hemi = ModelDomain::hemisphere();
    CHECK(rel_err(hemi.volume(), 2.0 * kPi) < 1e-15);
    CHECK(rel_err(hemi.boundary_volume(), 2.0 * kPi) < 1e-15);
    CHECK_FALSE(hemi.supports_robin());

    CHECK_THROWS_AS(ModelDomain::disk(-1.0), std::invalid_argument);
}

TEST_CASE("disk DtN branches: frozen values, multiplicity, poles") {
    const auto b0 = dtn_disk_branch(1.0, 1.0, 0);
    CHECK(rel_err(b0.beta, -0.57508091500430596) < 1e-12);
    CHECK(b0.multiplicity == 1);
    CHECK_FALSE(b0.pole);

    const auto b1 = dtn_disk_branch(1.0, 1.0, 1);
    CHECK(rel_err(b1.beta, 0.73888573574470373) < 1e-12);
    CHECK(b1.multiplicity == 2);

    // lambda R at the first zero of J_0: lambda^2 is a Dirichlet eigenvalue.
    CHECK(dtn_disk_branch(1.0, 2.404825557695773, 0).pole);

    // Neumann pin: beta_0 vanishes exactly where J_0' = -J_1 does.
    const auto neumann = dtn_disk_branch(1.0, 3.831705970207512, 0);
    CHECK(std::abs(neumann.beta) < 1e-9);
}

TEST_CASE("ball DtN branches") {
    const auto l0 = dtn_ball_branch(1.0, kPi / 2.0, 0);
    CHECK(rel_err(l0.beta, -2.0 / kPi) < 1e-12);
    CHECK(l0.multiplicity == 1);
    CHECK(dtn_ball_branch(1.0, kPi, 0).pole);
    CHECK(dtn_ball_branch(1.0, 1.0, 1).multiplicity == 3);
}

TEST_CASE("dtn window counts on the disk at lambda = 1") {
    const auto disk = ModelDomain::disk(1.0);
    const auto w = dtn_spectrum_window(disk, 1.0, -1.0, 1.0);
    CHECK(w.count == 3);  // beta_0 once, beta_1 twice
    CHECK(w.pole_warnings == 0);
    REQUIRE(w.inside.size() == 2);
    CHECK(w.inside[0].index == 0);
    CHECK(w.inside[1].index == 1);

    // beta_2 = 1.8297, beta_3 = 2.8734 (series-oracle values).
    CHECK(dtn_spectrum_window(disk, 1.0, 2.0, 2.8).count == 0);
    CHECK(dtn_spectrum_window(disk, 1.0, 2.8, 3.0).count == 2);
    CHECK(dtn_spectrum_window(disk, 1.0, 2.0, 3.0).count == 2);

    // Half-open additivity over a split point.
    const auto left = dtn_spectrum_window(disk, 1.0, -1.0, 0.0);
    const auto right = dtn_spectrum_window(disk, 1.0, 0.0, 1.0);
    CHECK(left.count + right.count == w.count);
}

TEST_CASE("dtn window on the ball includes the l = 0 branch") {
    const auto ball = ModelDomain::ball(1.0);
    const auto w = dtn_spectrum_window(ball, kPi / 2.0, -1.0, 0.0);
    CHECK(w.count == 1);
    REQUIRE(w.inside.size() == 1);
    CHECK(w.inside[0].index == 0);
    CHECK(rel_err(w.inside[0].beta, -2.0 / kPi) < 1e-12);
}

TEST_CASE("dtn window rejects unsupported domains and bad windows") {
    const auto rect = ModelDomain::rectangle(1.0, 1.0);
    CHECK_THROWS_AS(dtn_spectrum_window(rect, 1.0, -1.0, 1.0), UnsupportedDomainError);
    const auto disk = ModelDomain::disk(1.0);
    CHECK_THROWS_AS(dtn_spectrum_window(disk, 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(dtn_spectrum_window(disk, 0.0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("dtn window perturbs lambda off a Dirichlet pole and warns") {
    const auto disk = ModelDomain::disk(1.0);
    const auto w = dtn_spectrum_window(disk, 2.404825557695773, -1.0, 1.0);
    CHECK(w.pole_warnings >= 1);
    CHECK(w.lambda_used != 2.404825557695773);
    CHECK(w.count >= 1);  // counting is stable next to the pole
}

TEST_CASE("branch tail grows like index/(lambda R)") {
    const auto disk = ModelDomain::disk(1.0);
    const double lambda = 7.3;
    double prev = 0.0;
    for (int n = 12; n <= 20; ++n) {  // n > lambda R + 5
        const auto b = dtn_disk_branch(1.0, lambda, n);
        CHECK(b.beta > 0.0);
        if (n > 12) CHECK(b.beta > prev);
        prev = b.beta;
    }
    CHECK(dtn_spectrum_window(disk, lambda, -2.0, 2.0).count > 0);
}

TEST_CASE("robin 1d spectrum: Neumann and Dirichlet limits") {
    // Neumann: eigenvalues (h pi m / L)^2 including the constant mode.
    const auto neumann = robin_1d_spectrum(0.0, 0.1, 1.0, 1.0);
    CHECK(static_cast<long>(neumann.eigenvalues.size()) ==
          static_cast<long>(std::floor(1.0 / (kPi * 0.1))) + 1);
    CHECK(neumann.eigenvalues.front() == 0.0);
    CHECK(rel_err(neumann.eigenvalues[1], std::pow(0.1 * kPi, 2)) < 1e-9);

    // a -> -inf proxy: Dirichlet count, roots just below m pi / L.
    const auto dirichlet = robin_1d_spectrum(-1e6, 0.1, 1.0, 1.0);
    CHECK(static_cast<long>(dirichlet.eigenvalues.size()) ==
          static_cast<long>(std::floor(1.0 / (kPi * 0.1))));
    CHECK(dirichlet.trapped_count == 0);
    CHECK(dirichlet.eigenvalues.front() < std::pow(0.1 * kPi, 2));
    CHECK(rel_err(dirichlet.eigenvalues.front(), std::pow(0.1 * kPi, 2)) < 1e-4);
}

TEST_CASE("robin 1d trapped modes: frozen cases") {
    // (a=1, h=1, L=1): single even trapped mode, kappa = 1.5434046384182084.
    const auto s1 = robin_1d_spectrum(1.0, 1.0, 1.0, 0.0);
    CHECK(s1.trapped_count == 1);
    REQUIRE(s1.eigenvalues.size() == 1);
    CHECK(rel_err(s1.eigenvalues[0], -2.3820978778908408) < 1e-10);

    // (a=1, h=0.3, L=1): aL > 2h, both parities present.
    const auto s2 = robin_1d_spectrum(1.0, 0.3, 1.0, 0.0);
    CHECK(s2.trapped_count == 2);
    REQUIRE(s2.eigenvalues.size() == 2);
    CHECK(rel_err(s2.eigenvalues[0], -1.1239027032544829) < 1e-10);
    CHECK(rel_err(s2.eigenvalues[1], -0.82325193282894499) < 1e-10);

    // Threshold aL = 2h: mu = 0 joins the spectrum.
    const auto s3 = robin_1d_spectrum(2.0, 1.0, 1.0, 0.5);
    CHECK(std::count(s3.eigenvalues.begin(), s3.eigenvalues.end(), 0.0) == 1);
}

TEST_CASE("robin 1d spectrum against the even/odd oracle") {
    struct Case {
        double a, h, L, bound;
    };
    for (const Case c : {Case{-1.3, 0.37, 1.4, 1.0}, Case{0.8, 0.21, 1.0, 1.0},
                         Case{2.5, 0.5, 2.0, 1.5}, Case{-4.0, 0.09, 0.7, 1.0}}) {
        const auto got = robin_1d_spectrum(c.a, c.h, c.L, c.bound);
        const auto want = oracle_robin_1d(c.a, c.h, c.L, c.bound);
        CAPTURE(c.a);
        CAPTURE(c.h);
        CAPTURE(c.L);
        REQUIRE(got.eigenvalues.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i)
            CHECK(std::abs(got.eigenvalues[i] - want[i]) <
                  1e-8 * std::max(1.0, std::abs(want[i])));
    }
}

TEST_CASE("robin count on the rectangle: lattice limits and oracle") {
    const auto rect = ModelDomain::rectangle(1.0, 1.0);
    // Neumann lattice.
    CHECK(robin_count(rect, 0.0, 0.1) ==
          oracle::rectangle_lattice_count(1.0, 1.0, 100.0, false));
    // Dirichlet proxy.
    CHECK(robin_count(rect, -1e6, 0.1) ==
          oracle::rectangle_lattice_count(1.0, 1.0, 100.0, true));
    // Robin at a=1 versus independently merged even/odd oracle spectra.
    const auto s = oracle_robin_1d(1.0, 0.1, 1.0, 2.0);
    long long brute = 0;
    for (const double m1 : s)
        for (const double m2 : s)
            if (m1 + m2 < 1.0) ++brute;
    CHECK(robin_count(rect, 1.0, 0.1) == brute);
    // Non-square sides.
    const auto rect2 = ModelDomain::rectangle(1.0, 0.618);
    CHECK(robin_count(rect2, 0.0, 0.07) ==
          oracle::rectangle_lattice_count(1.0, 0.618, 1.0 / 0.0049, false));
}

TEST_CASE("robin count on the disk: Neumann equals the J_n'-zero count") {
    const auto disk = ModelDomain::disk(1.0);
    // Count zeros of J_n' below 5 from series derivatives, plus the constant.
    long long want = 1;  // constant mode at k = 0
    for (int n = 0;; ++n) {
        long zeros = 0;
        const int grid = 500;
        double prev = oracle::series_bessel_j_derivative(n, 1e-4);
        for (int i = 1; i <= grid; ++i) {
            const double x = 5.0 * i / grid;
            const double cur = oracle::series_bessel_j_derivative(n, x);
            if (prev * cur < 0.0) ++zeros;
            prev = cur;
        }
        if (zeros == 0 && n >= 1) break;
        want += zeros * (n == 0 ? 1 : 2);
    }
    CHECK(robin_count(disk, 0.0, 0.2) == want);
}

TEST_CASE("robin count on the disk: trapped and threshold modes at a = 1, h = 1") {
    const auto disk = ModelDomain::disk(1.0);
    // n=0 trapped mode (1) + n=1 harmonic threshold mode r e^{+-i phi} (2).
    CHECK(robin_count(disk, 1.0, 1.0) == 3);
    CHECK(robin_count(disk, -1.0, 1.0) == 0);
    // No trapped modes for a <= 0 at small h either: monotone in a.
    CHECK(robin_count(disk, -0.5, 0.2) <= robin_count(disk, 0.0, 0.2));
    CHECK(robin_count(disk, 0.0, 0.2) <= robin_count(disk, 0.5, 0.2));
}

TEST_CASE("robin count is monotone nondecreasing in a") {
    const auto disk = ModelDomain::disk(1.0);
    const auto rect = ModelDomain::rectangle(1.0, 1.0);
    const auto ball = ModelDomain::ball(1.0);
    for (const double h : {0.31, 0.11}) {
        long long prev_d = -1, prev_r = -1, prev_b = -1;
        for (const double a : {-8.0, -2.0, -0.5, 0.0, 0.5, 2.0, 8.0}) {
            const long long cd = robin_count(disk, a, h);
            const long long cr = robin_count(rect, a, h);
            const long long cb = robin_count(ball, a, h);
            CHECK(cd >= prev_d);
            CHECK(cr >= prev_r);
            CHECK(cb >= prev_b);
            prev_d = cd;
            prev_r = cr;
            prev_b = cb;
        }
    }
}

TEST_CASE("dirichlet counts") {
    CHECK(dirichlet_count(ModelDomain::disk(1.0), 0.35) == 1);   // j_{0,1} = 2.405 only
    CHECK(dirichlet_count(ModelDomain::disk(1.0), 0.2) == 3);    // + j_{1,1} = 3.832 twice
    CHECK(dirichlet_count(ModelDomain::rectangle(1.0, 1.0), 0.3) == 0);
    CHECK(dirichlet_count(ModelDomain::rectangle(1.0, 1.0), 0.15) == 1);
    CHECK(dirichlet_count(ModelDomain::ball(1.0), 0.3) == 1);    // pi <= 3.33, l = 0
    CHECK(dirichlet_count(ModelDomain::interval(1.0), 0.21) == 1);
}

TEST_CASE("robin/DtN duality at the branch level") {
    // a := beta_n(lambda) makes k = lambda a Robin root at h = 1/lambda:
    // h k J_n'(kR) - a J_n(kR) = J_n'(lambda R) - beta J_n(lambda R) = 0.
    for (const int n : {0, 1, 4}) {
        const double lambda = 6.1;
        const auto b = dtn_disk_branch(1.0, lambda, n);
        const double jn = oracle::series_bessel_j(n, lambda);
        const double jprime = oracle::series_bessel_j_derivative(n, lambda);
        CHECK(std::abs(jprime - b.beta * jn) <
              1e-10 * std::max(std::abs(jprime), std::abs(jn)));
    }
}

TEST_CASE("branch poles interlace: beta decreases through each segment") {
    // n = 0 on (j_{0,1}, j_{0,2}): +inf side down to -inf side.
    const double z1 = 2.4048255576957728, z2 = 5.5200781102863106;
    double prev = 1e300;
    for (int i = 1; i < 40; ++i) {
        const double x = z1 + (z2 - z1) * i / 40.0;
        const auto b = dtn_disk_branch(1.0, x, 0);
        CHECK(b.beta < prev);
        prev = b.beta;
    }
    CHECK(dtn_disk_branch(1.0, z1 + 0.005, 0).beta > 100.0);
    CHECK(dtn_disk_branch(1.0, z2 - 0.005, 0).beta < -100.0);
}

TEST_CASE("hemisphere zero-mode multiplicity equals the parity count") {
    for (long long n = 1; n <= 50; ++n) {
        long long brute = 0;
        for (long long m = -n; m <= n; ++m)
            if ((n + m) % 2 == 0) ++brute;
        CHECK(hemisphere_zero_mode_multiplicity(n) == brute);
        CHECK(hemisphere_zero_mode_multiplicity(n) == n + 1);
    }
    CHECK_THROWS_AS(hemisphere_zero_mode_multiplicity(0), std::invalid_argument);
}
