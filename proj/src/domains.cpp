#include "dtnlab/domains.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "dtnlab/bessel.hpp"
#include "dtnlab/parallel.hpp"
#include "dtnlab/roots.hpp"

namespace dtnlab::domains {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be > 0");
}

// Sign changes of f on [lo, hi] sampled with spacing <= step (roots assumed
// separated by > 2*step; Bessel zeros are separated by > pi).
long count_zeros_by_scan(const std::function<double(double)>& f, double lo, double hi,
                         double step) {
    if (!(hi > lo)) return 0;
    const long cells = static_cast<long>(std::ceil((hi - lo) / step)) + 1;
    long count = 0;
    double prev = f(lo);
    for (long i = 1; i <= cells; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells);
        const double cur = f(x);
        if (prev == 0.0 || prev * cur < 0.0) ++count;
        prev = cur;
    }
    return count;
}

long zeros_of_bessel_j_below(int n, double x_hi) {
    const double lo = std::max(n > 0 ? static_cast<double>(n) : 0.05, 1e-3);
    if (x_hi <= lo) return 0;
    return count_zeros_by_scan([n](double x) { return numerics::bessel_j(n, x); }, lo, x_hi,
                               kPi / 4.0);
}

long zeros_of_spherical_j_below(int l, double x_hi) {
    const double lo = std::max(l > 0 ? static_cast<double>(l) : 0.05, 1e-3);
    if (x_hi <= lo) return 0;
    return count_zeros_by_scan([l](double x) { return numerics::spherical_j(l, x); }, lo, x_hi,
                               kPi / 4.0);
}

}  // namespace

ModelDomain ModelDomain::disk(double radius) {
    require_positive(radius, "disk radius");
    ModelDomain d;
    d.kind_ = Kind::disk;
    d.dim_ = 2;
    d.volume_ = kPi * radius * radius;
    d.boundary_volume_ = 2.0 * kPi * radius;
    d.p1_ = radius;
    return d;
}

ModelDomain ModelDomain::ball(double radius) {
    require_positive(radius, "ball radius");
    ModelDomain d;
    d.kind_ = Kind::ball;
    d.dim_ = 3;
    d.volume_ = 4.0 / 3.0 * kPi * radius * radius * radius;
    d.boundary_volume_ = 4.0 * kPi * radius * radius;
    d.p1_ = radius;
    return d;
}

ModelDomain ModelDomain::rectangle(double l1, double l2) {
    require_positive(l1, "rectangle l1");
    require_positive(l2, "rectangle l2");
    ModelDomain d;
    d.kind_ = Kind::rectangle;
    d.dim_ = 2;
    d.volume_ = l1 * l2;
    d.boundary_volume_ = 2.0 * (l1 + l2);
    d.p1_ = l1;
    d.p2_ = l2;
    return d;
}

ModelDomain ModelDomain::hemisphere() {
    ModelDomain d;
    d.kind_ = Kind::hemisphere;
    d.dim_ = 2;
    d.volume_ = 2.0 * kPi;           // unit hemisphere area
    d.boundary_volume_ = 2.0 * kPi;  // equator length
    d.p1_ = 1.0;
    return d;
}

ModelDomain ModelDomain::interval(double length) {
    require_positive(length, "interval length");
    ModelDomain d;
    d.kind_ = Kind::interval;
    d.dim_ = 1;
    d.volume_ = length;
    d.boundary_volume_ = 2.0;
    d.p1_ = length;
    return d;
}

double ModelDomain::radius() const {
    if (kind_ != Kind::disk && kind_ != Kind::ball && kind_ != Kind::hemisphere)
        throw std::logic_error("radius() on a domain without one");
    return p1_;
}
double ModelDomain::l1() const {
    if (kind_ != Kind::rectangle) throw std::logic_error("l1() on a non-rectangle");
    return p1_;
}
double ModelDomain::l2() const {
    if (kind_ != Kind::rectangle) throw std::logic_error("l2() on a non-rectangle");
    return p2_;
}
double ModelDomain::length() const {
    if (kind_ != Kind::interval) throw std::logic_error("length() on a non-interval");
    return p1_;
}

Branch dtn_disk_branch(double radius, double lambda, int n) {
    require_positive(radius, "radius");
    require_positive(lambda, "lambda");
    const numerics::Ratio r = numerics::bessel_j_ratio(n, lambda * radius);
    return Branch{n, n == 0 ? 1 : 2, r.value, r.pole};
}

Branch dtn_ball_branch(double radius, double lambda, int l) {
    require_positive(radius, "radius");
    require_positive(lambda, "lambda");
    const numerics::Ratio r = numerics::spherical_j_ratio(l, lambda * radius);
    return Branch{l, 2 * l + 1, r.value, r.pole};
}

Branch dtn_branch(const ModelDomain& domain, double lambda, int index) {
    switch (domain.kind()) {
        case Kind::disk:
            return dtn_disk_branch(domain.radius(), lambda, index);
        case Kind::ball:
            return dtn_ball_branch(domain.radius(), lambda, index);
        default:
            throw UnsupportedDomainError("DtN branches exist only on disk and ball domains");
    }
}

std::vector<Branch> dtn_spectrum_enumerate(const ModelDomain& domain, double lambda,
                                           int index_max) {
    if (!domain.supports_dtn())
        throw UnsupportedDomainError("DtN spectrum exists only on disk and ball domains");
    require_positive(lambda, "lambda");
    if (index_max < 0) throw std::invalid_argument("index_max must be >= 0");
    std::vector<Branch> out(index_max + 1);
    numerics::parallel_for(index_max + 1,
                           [&](long i) { out[i] = dtn_branch(domain, lambda, static_cast<int>(i)); });
    return out;
}

WindowSpectrum dtn_spectrum_window(const ModelDomain& domain, double lambda, double a1,
                                   double a2) {
    if (!domain.supports_dtn())
        throw UnsupportedDomainError("DtN window counts exist only on disk and ball domains");
    require_positive(lambda, "lambda");
    if (!(a1 < a2)) throw std::invalid_argument("window requires a1 < a2");
    if (!std::isfinite(a1) || !std::isfinite(a2))
        throw std::invalid_argument("window endpoints must be finite");

    WindowSpectrum out;
    out.lambda_used = lambda;
    const double R = domain.radius();

    for (int attempt = 0; attempt < 4; ++attempt) {
        const double x = out.lambda_used * R;
        const int n0 = static_cast<int>(std::ceil(x * (1.0 + std::max(std::abs(a1), std::abs(a2))))) + 20;
        const long hard_cap = 10L * n0 + 1000;

        std::vector<Branch> branches(n0 + 1);
        numerics::parallel_for(n0 + 1, [&](long i) {
            branches[i] = dtn_branch(domain, out.lambda_used, static_cast<int>(i));
        });

        // Extend the tail until five consecutive branches sit above the window
        // and behave like the positive increasing tail beta ~ index/(lambda R).
        auto tail_ok = [&]() {
            const size_t m = branches.size();
            if (m < 6) return false;
            for (size_t i = m - 5; i < m; ++i) {
                const Branch& b = branches[i];
                if (b.pole || !(b.beta > a2) || !(b.beta > 0.0)) return false;
                if (!(b.beta > branches[i - 1].beta)) return false;
            }
            return true;
        };
        while (!tail_ok()) {
            const int next = static_cast<int>(branches.size());
            if (next > hard_cap)
                throw std::runtime_error("dtn_spectrum_window: index cutoff failed to stabilize");
            branches.push_back(dtn_branch(domain, out.lambda_used, next));
        }

        const bool pole_hit = std::any_of(branches.begin(), branches.end(),
                                          [](const Branch& b) { return b.pole; });
        if (pole_hit && attempt < 3) {
            // Dirichlet frequency: counting is stable nearby, so nudge lambda.
            out.lambda_used *= 1.0 + 1e-9;
            ++out.pole_warnings;
            continue;
        }
        if (pole_hit)
            throw std::runtime_error("dtn_spectrum_window: persistent Dirichlet pole");

        for (const Branch& b : branches) {
            if (b.beta >= a1 && b.beta < a2) {
                out.inside.push_back(b);
                out.count += b.multiplicity;
            }
        }
        return out;
    }
    throw std::runtime_error("dtn_spectrum_window: unreachable");
}

namespace {

// Even/odd trapped-mode rates on [0, L]; both secular functions are monotone
// in kappa so bisection brackets are guaranteed.
double trapped_even_kappa(double a, double h, double L) {
    const auto f = [&](double k) { return std::tanh(0.5 * k * L) - a / (h * k); };
    double lo = a / h;  // f(lo) = tanh(aL/2h) - 1 < 0
    double hi = 2.0 * a / h;
    while (f(hi) <= 0.0) hi *= 2.0;
    const auto root = numerics::refine_bracket([&](double k) { return f(k); }, lo, hi, f(lo), f(hi));
    return root.root;
}

double trapped_odd_kappa(double a, double h, double L) {
    const auto f = [&](double k) { return std::tanh(0.5 * k * L) - h * k / a; };
    const double hi = a / h;  // f(hi) = tanh(aL/2h) - 1 < 0
    double lo = 1e-9 * hi;
    while (!(f(lo) > 0.0) && lo < hi) lo *= 4.0;  // f ~ k(L/2 - h/a) > 0 near 0
    const auto root = numerics::refine_bracket([&](double k) { return f(k); }, lo, hi, f(lo), f(hi));
    return root.root;
}

bool mu_zero_is_eigenvalue(double a, double h, double L) {
    if (a == 0.0) return true;  // constant mode
    return std::abs(a * L - 2.0 * h) <= 1e-12 * std::max({1.0, std::abs(a) * L, 2.0 * h});
}

}  // namespace

Spectrum1D robin_1d_spectrum(double a, double h, double L, double mu_max) {
    require_positive(h, "h");
    require_positive(L, "L");
    Spectrum1D out;

    if (a > 0.0) {
        const double ke = trapped_even_kappa(a, h, L);
        const double mu_even = -(h * ke) * (h * ke);
        if (mu_even < mu_max) {
            out.eigenvalues.push_back(mu_even);
            ++out.trapped_count;
        }
        if (a * L > 2.0 * h && !mu_zero_is_eigenvalue(a, h, L)) {
            const double ko = trapped_odd_kappa(a, h, L);
            const double mu_odd = -(h * ko) * (h * ko);
            if (mu_odd < mu_max) {
                out.eigenvalues.push_back(mu_odd);
                ++out.trapped_count;
            }
        }
    }
    if (mu_zero_is_eigenvalue(a, h, L) && 0.0 < mu_max) out.eigenvalues.push_back(0.0);

    if (mu_max > 0.0) {
        const double K = std::sqrt(mu_max) / h;
        const double k_lo = K * 1e-9;
        // Root spacing is ~ pi/L away from the boundary-phase region; sample
        // at >= 16 cells per expected gap and let the scanner refine dips.
        const int grid = static_cast<int>(std::ceil((K - k_lo) * L / kPi)) * 16 + 32;
        const auto scan = numerics::count_sign_changes(
            [&](double k) {
                const double hk = h * k;
                return (hk * hk - a * a) * std::sin(k * L) + 2.0 * a * hk * std::cos(k * L);
            },
            k_lo, K, grid);
        if (scan.budget_exhausted)
            throw std::runtime_error("robin_1d_spectrum: root refinement budget exceeded");
        for (const auto& r : scan.roots) {
            const double mu = (h * r.root) * (h * r.root);
            if (mu < mu_max) out.eigenvalues.push_back(mu);
        }
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

long long robin_1d_count(double a, double h, double L, double tau) {
    return static_cast<long long>(robin_1d_spectrum(a, h, L, tau).eigenvalues.size());
}

namespace {

// Oscillatory Robin modes on one angular branch, counted through the segment
// structure of phi(x) = x f'(x)/f(x) (f = J_n or j_l): phi decreases strictly
// from `index` at x = 0+ to -inf at the first zero of f, then from +inf to
// -inf between consecutive zeros.  With c = aR/h the mode count below the
// diagonal threshold is
//   [c < index] + (#zeros - 1) + [phi(X) < c]        (#zeros >= 1)
//   [phi(X) < c < index]                              (#zeros = 0).
struct BranchCount {
    long long modes = 0;
};

BranchCount robin_branch_count(bool ball, int index, double X, double c) {
    BranchCount out;
    const double thr = 1e-9 * std::max(1.0, std::abs(c));
    const bool threshold = std::abs(c - index) <= thr;  // harmonic r^n mode, mu = -1
    const bool trapped = !threshold && c > index;       // single modified-branch root
    const bool s0 = !threshold && c < index;

    double x_eff = X;
    numerics::Ratio ratio = ball ? numerics::spherical_j_ratio(index, x_eff)
                                 : numerics::bessel_j_ratio(index, x_eff);
    for (int tries = 0; ratio.pole && tries < 3; ++tries) {
        x_eff *= 1.0 - 1e-9;
        ratio = ball ? numerics::spherical_j_ratio(index, x_eff)
                     : numerics::bessel_j_ratio(index, x_eff);
    }
    const double phi = x_eff * ratio.value;
    const long zeros = ball ? zeros_of_spherical_j_below(index, x_eff)
                            : zeros_of_bessel_j_below(index, x_eff);

    if (zeros >= 1)
        out.modes = (s0 ? 1 : 0) + (zeros - 1) + (phi < c ? 1 : 0);
    else
        out.modes = (s0 && phi < c) ? 1 : 0;
    if (threshold) ++out.modes;
    if (trapped) ++out.modes;
    return out;
}

long long robin_count_radial(bool ball, double radius, double a, double h) {
    const double X = radius / h;
    const double c = a * radius / h;
    const long long guard =
        static_cast<long long>(std::sqrt(std::max(c, 0.0) * std::max(c, 0.0) + X * X)) * 10 + 2000;

    long long total = 0;
    int consecutive_empty = 0;
    std::vector<long long> partial;
    const int chunk = 64;
    for (int base = 0;; base += chunk) {
        partial.assign(chunk, 0);
        numerics::parallel_for(chunk, [&](long i) {
            const int n = base + static_cast<int>(i);
            const BranchCount bc = robin_branch_count(ball, n, X, c);
            const long long mult = ball ? 2LL * n + 1 : (n == 0 ? 1 : 2);
            partial[i] = bc.modes * mult;
        });
        for (int i = 0; i < chunk; ++i) {
            const int n = base + i;
            total += partial[i];
            if (partial[i] == 0 && n > X && n > c)
                ++consecutive_empty;
            else
                consecutive_empty = 0;
            if (consecutive_empty >= 5) return total;
        }
        if (base > guard) throw std::runtime_error("robin_count: branch scan budget exceeded");
    }
}

long long robin_count_rectangle(double l1, double l2, double a, double h) {
    double mu_min1 = 0.0, mu_min2 = 0.0;
    if (a > 0.0) {
        const double k1 = trapped_even_kappa(a, h, l1);
        const double k2 = trapped_even_kappa(a, h, l2);
        mu_min1 = -(h * k1) * (h * k1);
        mu_min2 = -(h * k2) * (h * k2);
    }
    const Spectrum1D s1 = robin_1d_spectrum(a, h, l1, 1.0 - mu_min2);
    const Spectrum1D s2 = robin_1d_spectrum(a, h, l2, 1.0 - mu_min1);
    long long total = 0;
    for (const double mu1 : s1.eigenvalues) {
        const auto it = std::lower_bound(s2.eigenvalues.begin(), s2.eigenvalues.end(), 1.0 - mu1);
        total += static_cast<long long>(it - s2.eigenvalues.begin());
    }
    return total;
}

}  // namespace

long long robin_count(const ModelDomain& domain, double a, double h) {
    require_positive(h, "h");
    if (!std::isfinite(a)) throw std::invalid_argument("robin_count: a must be finite");
    switch (domain.kind()) {
        case Kind::disk:
            return robin_count_radial(false, domain.radius(), a, h);
        case Kind::ball:
            return robin_count_radial(true, domain.radius(), a, h);
        case Kind::rectangle:
            return robin_count_rectangle(domain.l1(), domain.l2(), a, h);
        default:
            throw UnsupportedDomainError("robin_count supports disk, ball and rectangle");
    }
}

long long dirichlet_count(const ModelDomain& domain, double h) {
    require_positive(h, "h");
    switch (domain.kind()) {
        case Kind::disk: {
            const double X = domain.radius() / h;
            long long total = 0;
            for (int n = 0;; ++n) {
                const long z = zeros_of_bessel_j_below(n, X);
                if (z == 0 && n >= 1) break;
                total += z * (n == 0 ? 1 : 2);
            }
            return total;
        }
        case Kind::ball: {
            const double X = domain.radius() / h;
            long long total = 0;
            for (int l = 0;; ++l) {
                const long z = zeros_of_spherical_j_below(l, X);
                if (z == 0 && l >= 1) break;
                total += z * (2LL * l + 1);
            }
            return total;
        }
        case Kind::rectangle: {
            const double bound = 1.0 / (h * h);
            const double L1 = domain.l1(), L2 = domain.l2();
            long long total = 0;
            for (long m1 = 1; kPi * kPi * m1 * m1 / (L1 * L1) <= bound; ++m1) {
                const double rest = bound - kPi * kPi * m1 * m1 / (L1 * L1);
                if (rest < kPi * kPi / (L2 * L2)) continue;
                total += static_cast<long long>(std::floor(std::sqrt(rest) * L2 / kPi));
            }
            return total;
        }
        case Kind::interval:
            return static_cast<long long>(std::floor(domain.length() / (kPi * h)));
        default:
            throw UnsupportedDomainError("dirichlet_count supports disk, ball, rectangle, interval");
    }
}

long long hemisphere_zero_mode_multiplicity(long long n) {
    if (n < 1) throw std::invalid_argument("hemisphere_zero_mode_multiplicity: n must be >= 1");
    return n + 1;  // #{m in [-n, n] : n + m even}
}

}  // namespace dtnlab::domains
