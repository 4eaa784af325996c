#include "dtnlab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dtnlab/bessel.hpp"
#include "dtnlab/kappa.hpp"
#include "dtnlab/roots.hpp"

namespace dtnlab::counting {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_dtn_domain(const domains::ModelDomain& domain) {
    if (!domain.supports_dtn())
        throw domains::UnsupportedDomainError(
            "operation requires a DtN-capable domain (disk or ball)");
}

}  // namespace

SpectralWindow SpectralWindow::from_a(double a1, double a2) {
    if (!std::isfinite(a1) || !std::isfinite(a2))
        throw std::invalid_argument("SpectralWindow: endpoints must be finite");
    if (!(a1 < a2)) throw std::invalid_argument("SpectralWindow: requires a1 < a2");
    SpectralWindow w;
    w.a1 = a1;
    w.a2 = a2;
    w.theta1 = kappa::theta_from_a(a1);
    w.theta2 = kappa::theta_from_a(a2);
    return w;
}

SpectralWindow SpectralWindow::from_theta(double theta1, double theta2) {
    if (!(theta1 > 0.0 && theta2 < 2.0 * kPi && theta1 < theta2))
        throw std::invalid_argument("SpectralWindow: requires 0 < theta1 < theta2 < 2pi");
    SpectralWindow w;
    w.theta1 = theta1;
    w.theta2 = theta2;
    w.a1 = kappa::a_from_theta(theta1);
    w.a2 = kappa::a_from_theta(theta2);
    return w;
}

CountReport count_dtn(const domains::ModelDomain& domain, double lambda,
                      const SpectralWindow& window) {
    check_dtn_domain(domain);
    const auto ws = domains::dtn_spectrum_window(domain, lambda, window.a1, window.a2);
    CountReport r;
    r.lambda = lambda;
    r.lambda_used = ws.lambda_used;
    r.count = ws.count;
    r.pole_warnings = ws.pole_warnings;
    const int d = domain.dim();
    const double dk = kappa::kappa_quadrature(window.a2, d).value -
                      kappa::kappa_quadrature(window.a1, d).value;
    r.weyl_prediction = dk * domain.boundary_volume() * std::pow(lambda, d - 1);
    r.rel_discrepancy = (static_cast<double>(r.count) - r.weyl_prediction) / r.weyl_prediction;
    return r;
}

CountReport count_cayley(const domains::ModelDomain& domain, double lambda, double theta1,
                         double theta2) {
    return count_dtn(domain, lambda, SpectralWindow::from_theta(theta1, theta2));
}

long long robin_count(const domains::ModelDomain& domain, double a, double h) {
    return domains::robin_count(domain, a, h);
}

BsCheckResult birman_schwinger_check(const domains::ModelDomain& domain, double lambda,
                                     const SpectralWindow& window) {
    check_dtn_domain(domain);
    const auto ws = domains::dtn_spectrum_window(domain, lambda, window.a1, window.a2);
    BsCheckResult out;
    out.lhs = ws.count;
    out.lambda_used = ws.lambda_used;
    out.pole_warnings = ws.pole_warnings;
    const double h = 1.0 / ws.lambda_used;
    out.rhs = domains::robin_count(domain, window.a2, h) -
              domains::robin_count(domain, window.a1, h);
    out.equal = out.lhs == out.rhs;
    return out;
}

BranchFlowResult branch_flow(const domains::ModelDomain& domain, int index, double lambda_lo,
                             double lambda_hi, int samples_per_segment) {
    check_dtn_domain(domain);
    if (!(0.0 < lambda_lo && lambda_lo < lambda_hi))
        throw std::invalid_argument("branch_flow: requires 0 < lambda_lo < lambda_hi");
    if (samples_per_segment < 2) throw std::invalid_argument("branch_flow: need >= 2 samples");

    const double R = domain.radius();
    const bool ball = domain.kind() == domains::Kind::ball;
    // Dirichlet poles of the branch = zeros of J_n (j_l) between the ends.
    const auto scan = numerics::count_sign_changes(
        [&](double x) {
            return ball ? numerics::spherical_j(index, x) : numerics::bessel_j(index, x);
        },
        lambda_lo * R, lambda_hi * R,
        std::max(64, static_cast<int>((lambda_hi - lambda_lo) * R * 8.0 / kPi)));

    std::vector<double> edges{lambda_lo};
    for (const auto& r : scan.roots) edges.push_back(r.root / R);
    edges.push_back(lambda_hi);

    BranchFlowResult out;
    for (size_t s = 0; s + 1 < edges.size(); ++s) {
        BranchFlowSegment seg;
        seg.lambda_lo = edges[s];
        seg.lambda_hi = edges[s + 1];
        const double width = seg.lambda_hi - seg.lambda_lo;
        const double margin = std::max(1e-9, 1e-6 * width);
        if (width <= 2.0 * margin) continue;
        for (int i = 0; i < samples_per_segment; ++i) {
            const double lam = seg.lambda_lo + margin +
                               (width - 2.0 * margin) * i / (samples_per_segment - 1);
            const auto b = domains::dtn_branch(domain, lam, index);
            if (b.pole) continue;
            if (!seg.samples.empty() && !(b.beta < seg.samples.back().second) && out.monotone) {
                out.monotone = false;
                out.violation_lambda = lam;
                out.violation_beta_before = seg.samples.back().second;
                out.violation_beta_after = b.beta;
            }
            seg.samples.emplace_back(lam, b.beta);
        }
        out.segments.push_back(std::move(seg));
    }
    return out;
}

WeylFitResult weyl_fit(const domains::ModelDomain& domain, const SpectralWindow& window,
                       const std::vector<double>& lambdas) {
    check_dtn_domain(domain);
    if (lambdas.size() < 4) throw std::invalid_argument("weyl_fit: need >= 4 lambda values");
    const auto [lo, hi] = std::minmax_element(lambdas.begin(), lambdas.end());
    if (!(*lo > 0.0) || *hi / *lo < 4.0)
        throw std::invalid_argument("weyl_fit: lambda values must span a factor >= 4");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const double lam : lambdas) {
        const auto rep = count_dtn(domain, lam, window);
        if (rep.count <= 0) throw std::runtime_error("weyl_fit: nonpositive count in fit");
        const double x = std::log(lam);
        const double y = std::log(static_cast<double>(rep.count));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(lambdas.size());
    WeylFitResult out;
    out.fitted_power = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.fitted_coefficient = std::exp((sy - out.fitted_power * sx) / n);
    const int d = domain.dim();
    out.reference_power = d - 1;
    out.reference_coefficient = (kappa::kappa_quadrature(window.a2, d).value -
                                 kappa::kappa_quadrature(window.a1, d).value) *
                                domain.boundary_volume();
    return out;
}

RobinSecondTerm robin_second_term(const domains::ModelDomain& domain, double a, double lambda,
                                  int samples, double spread) {
    if (!domain.supports_robin())
        throw domains::UnsupportedDomainError("robin_second_term needs a Robin-capable domain");
    if (samples < 1) throw std::invalid_argument("robin_second_term: samples must be >= 1");
    if (!(spread >= 0.0 && spread < 1.0))
        throw std::invalid_argument("robin_second_term: spread must lie in [0, 1)");
    const int d = domain.dim();
    const double omega_d = kappa::unit_ball_volume(d);

    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double frac = samples == 1 ? 0.5 : static_cast<double>(i) / (samples - 1);
        const double lam = lambda * (1.0 - spread) *
                           std::pow((1.0 + spread) / (1.0 - spread), frac);
        const double h = 1.0 / lam;
        const double bulk = omega_d * domain.volume() / std::pow(2.0 * kPi * h, d);
        const double n = static_cast<double>(domains::robin_count(domain, a, h));
        sum += (n - bulk) * std::pow(h, d - 1);
    }
    RobinSecondTerm out;
    out.estimate = sum / samples;
    out.reference = kappa::kappa_quadrature(a, d).value * domain.boundary_volume();
    return out;
}

double robin_bulk_ratio(const domains::ModelDomain& domain, double a, double h) {
    if (!domain.supports_robin())
        throw domains::UnsupportedDomainError("robin_bulk_ratio needs a Robin-capable domain");
    const int d = domain.dim();
    const double n = static_cast<double>(domains::robin_count(domain, a, h));
    return n * std::pow(2.0 * kPi * h, d) / (kappa::unit_ball_volume(d) * domain.volume());
}

MeasureHistogram limiting_measure_histogram(const domains::ModelDomain& domain, double lambda,
                                            int bins, double theta_lo, double theta_hi) {
    check_dtn_domain(domain);
    if (bins < 8) throw std::invalid_argument("limiting_measure_histogram: bins must be >= 8");
    const double delta = 0.1;
    if (!(theta_lo >= delta && theta_hi <= 2.0 * kPi - delta && theta_lo < theta_hi))
        throw std::invalid_argument(
            "limiting_measure_histogram: need delta <= theta_lo < theta_hi <= 2pi - delta");

    const double a_lo = kappa::a_from_theta(theta_lo);
    const double a_hi = kappa::a_from_theta(theta_hi);
    const auto ws = domains::dtn_spectrum_window(domain, lambda, a_lo, a_hi);
    const int d = domain.dim();
    const double h = 1.0 / ws.lambda_used;
    const double weight = std::pow(2.0 * kPi * h, d - 1);
    const double width = (theta_hi - theta_lo) / bins;

    MeasureHistogram out;
    out.theta_lo = theta_lo;
    out.theta_hi = theta_hi;
    out.lambda_used = ws.lambda_used;
    out.masses.assign(bins, 0.0);
    out.references.assign(bins, 0.0);
    for (const auto& b : ws.inside) {
        const double theta = kappa::theta_from_a(b.beta);
        int bin = static_cast<int>((theta - theta_lo) / width);
        bin = std::clamp(bin, 0, bins - 1);
        out.masses[bin] += weight * b.multiplicity;
    }
    const double scale = std::pow(2.0 * kPi, d - 1) * domain.boundary_volume();
    for (int i = 0; i < bins; ++i) {
        const double t0 = theta_lo + width * i;
        const double t1 = theta_lo + width * (i + 1);
        out.references[i] = scale * (kappa::kappa_tilde(t1, d) - kappa::kappa_tilde(t0, d));
    }
    return out;
}

DirichletLimitResult dirichlet_limit_check(const domains::ModelDomain& domain, double h,
                                           double a_proxy) {
    if (!domain.supports_robin())
        throw domains::UnsupportedDomainError("dirichlet_limit_check needs a Robin-capable domain");
    if (!(a_proxy < 0.0)) throw std::invalid_argument("dirichlet_limit_check: a_proxy must be < 0");
    DirichletLimitResult out;
    out.robin_count = domains::robin_count(domain, a_proxy, h);
    out.dirichlet_count = domains::dirichlet_count(domain, h);
    out.equal = out.robin_count == out.dirichlet_count;
    // A Dirichlet frequency within 1e-6 of 1/h makes the comparison fragile.
    out.threshold_warning = domains::dirichlet_count(domain, h / (1.0 + 1e-6)) !=
                            domains::dirichlet_count(domain, h * (1.0 + 1e-6));
    return out;
}

}  // namespace dtnlab::counting
