#include "dtnlab/dtnlab.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "dtnlab/counting.hpp"
#include "dtnlab/domains.hpp"
#include "dtnlab/halfline.hpp"
#include "dtnlab/kappa.hpp"
#include "dtnlab/tolerance.hpp"

struct dtnlab_domain {
    dtnlab::domains::ModelDomain value;
};

struct dtnlab_spectrum {
    std::vector<dtnlab::domains::Branch> branches;
};

namespace {

thread_local std::string g_last_error;

dtnlab_status fail(dtnlab_status code, const char* what) {
    g_last_error = what ? what : "";
    return code;
}

template <class F>
dtnlab_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return DTNLAB_OK;
    } catch (const dtnlab::domains::UnsupportedDomainError& e) {
        return fail(DTNLAB_ERR_UNSUPPORTED_DOMAIN, e.what());
    } catch (const dtnlab::numerics::NonConvergenceError& e) {
        return fail(DTNLAB_ERR_NO_CONVERGENCE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(DTNLAB_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(DTNLAB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DTNLAB_ERR_INTERNAL, "unknown error");
    }
}

template <class F>
dtnlab_domain* make_domain(F&& factory) {
    try {
        auto* d = new dtnlab_domain{factory()};
        g_last_error.clear();
        return d;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    } catch (...) {
        g_last_error = "unknown error";
        return nullptr;
    }
}

}  // namespace

extern "C" {

const char* dtnlab_version(void) { return "0.1.0"; }

const char* dtnlab_status_message(dtnlab_status status) {
    switch (status) {
        case DTNLAB_OK:
            return "ok";
        case DTNLAB_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case DTNLAB_ERR_NO_CONVERGENCE:
            return "numerical scheme failed to converge";
        case DTNLAB_ERR_UNSUPPORTED_DOMAIN:
            return "operation not supported on this domain";
        case DTNLAB_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char* dtnlab_last_error(void) { return g_last_error.c_str(); }

dtnlab_domain* dtnlab_domain_disk(double radius) {
    return make_domain([&] { return dtnlab::domains::ModelDomain::disk(radius); });
}
dtnlab_domain* dtnlab_domain_ball(double radius) {
    return make_domain([&] { return dtnlab::domains::ModelDomain::ball(radius); });
}
dtnlab_domain* dtnlab_domain_rectangle(double l1, double l2) {
    return make_domain([&] { return dtnlab::domains::ModelDomain::rectangle(l1, l2); });
}
dtnlab_domain* dtnlab_domain_hemisphere(void) {
    return make_domain([] { return dtnlab::domains::ModelDomain::hemisphere(); });
}
void dtnlab_domain_free(dtnlab_domain* domain) { delete domain; }

int dtnlab_domain_dim(const dtnlab_domain* domain) { return domain ? domain->value.dim() : 0; }
double dtnlab_domain_volume(const dtnlab_domain* domain) {
    return domain ? domain->value.volume() : 0.0;
}
double dtnlab_domain_boundary_volume(const dtnlab_domain* domain) {
    return domain ? domain->value.boundary_volume() : 0.0;
}

dtnlab_status dtnlab_kappa_quadrature(double a, int dim, double rel_tol, double* out) {
    if (!out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] {
        dtnlab::numerics::Tolerance tol;
        if (rel_tol > 0.0) tol.rel = rel_tol;
        *out = dtnlab::kappa::kappa_quadrature(a, dim, tol).value;
    });
}

dtnlab_status dtnlab_kappa_closed_form_d3(double a, double* out) {
    if (!out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = dtnlab::kappa::kappa_closed_form_d3(a).value; });
}

dtnlab_status dtnlab_kappa_halfline(double a, int dim, double eps, double* out) {
    if (!out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = dtnlab::halfline::kappa_from_boundary_layer(a, dim, eps).kappa; });
}

dtnlab_status dtnlab_kappa_tilde(double theta, int dim, double* out) {
    if (!out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = dtnlab::kappa::kappa_tilde(theta, dim); });
}

double dtnlab_cayley_theta_from_a(double a) { return dtnlab::kappa::theta_from_a(a); }
double dtnlab_cayley_a_from_theta(double theta) { return dtnlab::kappa::a_from_theta(theta); }

dtnlab_status dtnlab_spectrum_compute(const dtnlab_domain* domain, double lambda, int index_max,
                                      dtnlab_spectrum** out) {
    if (!domain || !out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto branches = dtnlab::domains::dtn_spectrum_enumerate(domain->value, lambda, index_max);
        *out = new dtnlab_spectrum{std::move(branches)};
    });
}

long dtnlab_spectrum_size(const dtnlab_spectrum* spectrum) {
    return spectrum ? static_cast<long>(spectrum->branches.size()) : 0;
}

dtnlab_status dtnlab_spectrum_branch(const dtnlab_spectrum* spectrum, long i, int* index,
                                     int* multiplicity, double* beta, int* is_pole) {
    if (!spectrum || i < 0 || i >= static_cast<long>(spectrum->branches.size()))
        return fail(DTNLAB_ERR_INVALID_ARGUMENT, "spectrum index out of range");
    const auto& b = spectrum->branches[static_cast<size_t>(i)];
    if (index) *index = b.index;
    if (multiplicity) *multiplicity = b.multiplicity;
    if (beta) *beta = b.beta;
    if (is_pole) *is_pole = b.pole ? 1 : 0;
    return DTNLAB_OK;
}

void dtnlab_spectrum_free(dtnlab_spectrum* spectrum) { delete spectrum; }

namespace {

void fill_report(const dtnlab::counting::CountReport& r, dtnlab_count_report* out) {
    out->count = r.count;
    out->lambda_used = r.lambda_used;
    out->weyl_prediction = r.weyl_prediction;
    out->rel_discrepancy = r.rel_discrepancy;
    out->pole_warnings = r.pole_warnings;
}

}  // namespace

dtnlab_status dtnlab_count_window(const dtnlab_domain* domain, double lambda, double a1,
                                  double a2, dtnlab_count_report* out) {
    if (!domain || !out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        const auto rep = dtnlab::counting::count_dtn(
            domain->value, lambda, dtnlab::counting::SpectralWindow::from_a(a1, a2));
        fill_report(rep, out);
    });
}

dtnlab_status dtnlab_count_cayley(const dtnlab_domain* domain, double lambda, double theta1,
                                  double theta2, dtnlab_count_report* out) {
    if (!domain || !out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        const auto rep = dtnlab::counting::count_cayley(domain->value, lambda, theta1, theta2);
        fill_report(rep, out);
    });
}

dtnlab_status dtnlab_robin_count(const dtnlab_domain* domain, double a, double h,
                                 long long* out) {
    if (!domain || !out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = dtnlab::domains::robin_count(domain->value, a, h); });
}

dtnlab_status dtnlab_birman_schwinger_check(const dtnlab_domain* domain, double lambda,
                                            double a1, double a2, dtnlab_bs_report* out) {
    if (!domain || !out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        const auto r = dtnlab::counting::birman_schwinger_check(
            domain->value, lambda, dtnlab::counting::SpectralWindow::from_a(a1, a2));
        out->lhs = r.lhs;
        out->rhs = r.rhs;
        out->equal = r.equal ? 1 : 0;
        out->pole_warnings = r.pole_warnings;
        out->lambda_used = r.lambda_used;
    });
}

dtnlab_status dtnlab_weyl_fit(const dtnlab_domain* domain, double a1, double a2,
                              const double* lambdas, size_t n_lambdas,
                              dtnlab_weyl_fit_report* out) {
    if (!domain || !out || !lambdas) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        const std::vector<double> ls(lambdas, lambdas + n_lambdas);
        const auto r = dtnlab::counting::weyl_fit(
            domain->value, dtnlab::counting::SpectralWindow::from_a(a1, a2), ls);
        out->fitted_power = r.fitted_power;
        out->fitted_coefficient = r.fitted_coefficient;
        out->reference_power = r.reference_power;
        out->reference_coefficient = r.reference_coefficient;
    });
}

dtnlab_status dtnlab_robin_second_term(const dtnlab_domain* domain, double a, double lambda,
                                       int samples, double spread, double* estimate,
                                       double* reference) {
    if (!domain || !estimate || !reference)
        return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        const auto r =
            dtnlab::counting::robin_second_term(domain->value, a, lambda, samples, spread);
        *estimate = r.estimate;
        *reference = r.reference;
    });
}

dtnlab_status dtnlab_robin_bulk_ratio(const dtnlab_domain* domain, double a, double h,
                                      double* out) {
    if (!domain || !out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = dtnlab::counting::robin_bulk_ratio(domain->value, a, h); });
}

dtnlab_status dtnlab_measure_histogram(const dtnlab_domain* domain, double lambda,
                                       double theta_lo, double theta_hi, long bins,
                                       double* masses, double* references) {
    if (!domain || !masses || !references || bins <= 0)
        return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer or bad bin count");
    return guarded([&] {
        const auto hist = dtnlab::counting::limiting_measure_histogram(
            domain->value, lambda, static_cast<int>(bins), theta_lo, theta_hi);
        std::memcpy(masses, hist.masses.data(), sizeof(double) * hist.masses.size());
        std::memcpy(references, hist.references.data(), sizeof(double) * hist.references.size());
    });
}

dtnlab_status dtnlab_dirichlet_limit_check(const dtnlab_domain* domain, double h,
                                           double a_proxy, dtnlab_dirichlet_report* out) {
    if (!domain || !out) return fail(DTNLAB_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        const auto r = dtnlab::counting::dirichlet_limit_check(domain->value, h, a_proxy);
        out->robin_count = r.robin_count;
        out->dirichlet_count = r.dirichlet_count;
        out->equal = r.equal ? 1 : 0;
        out->threshold_warning = r.threshold_warning ? 1 : 0;
    });
}

long long dtnlab_hemisphere_zero_mode_multiplicity(long long n) {
    return dtnlab::domains::hemisphere_zero_mode_multiplicity(n);
}

}  // extern "C"
