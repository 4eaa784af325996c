/* dtnlab -- spectral asymptotics of the semiclassical Dirichlet-to-Neumann
 * operator on model domains: the two-term Weyl coefficient kappa(a) evaluated
 * three independent ways, exact DtN/Robin spectra, and the counting
 * identities connecting them.
 *
 * C surface: opaque handles + status codes.  All functions are thread-safe;
 * DTNLAB_THREADS caps internal parallelism.
 */
#ifndef DTNLAB_H
#define DTNLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dtnlab_status {
    DTNLAB_OK = 0,
    DTNLAB_ERR_INVALID_ARGUMENT = 1,
    DTNLAB_ERR_NO_CONVERGENCE = 2,
    DTNLAB_ERR_UNSUPPORTED_DOMAIN = 3,
    DTNLAB_ERR_INTERNAL = 4
} dtnlab_status;

const char* dtnlab_version(void);
const char* dtnlab_status_message(dtnlab_status status);
/* Message of the last failure on this thread (empty string if none). */
const char* dtnlab_last_error(void);

/* ---- model domains ---- */

typedef struct dtnlab_domain dtnlab_domain;

dtnlab_domain* dtnlab_domain_disk(double radius);
dtnlab_domain* dtnlab_domain_ball(double radius);
dtnlab_domain* dtnlab_domain_rectangle(double l1, double l2);
dtnlab_domain* dtnlab_domain_hemisphere(void);
void dtnlab_domain_free(dtnlab_domain* domain);

int dtnlab_domain_dim(const dtnlab_domain* domain);
double dtnlab_domain_volume(const dtnlab_domain* domain);
double dtnlab_domain_boundary_volume(const dtnlab_domain* domain);

/* ---- kappa(a) and the Cayley map ---- */

/* Quadrature route (any dim >= 2); a may be -HUGE_VAL for the Dirichlet
 * endpoint; a = 0 returns the two-sided limit. */
dtnlab_status dtnlab_kappa_quadrature(double a, int dim, double rel_tol, double* out);
/* Exact d = 3 expression. */
dtnlab_status dtnlab_kappa_closed_form_d3(double a, double* out);
/* Half-line boundary-layer oracle (independent route); eps in (0, 0.1]. */
dtnlab_status dtnlab_kappa_halfline(double a, int dim, double eps, double* out);
/* kappa on the circle, theta in (0, 2pi). */
dtnlab_status dtnlab_kappa_tilde(double theta, int dim, double* out);

/* theta(a) = pi + 2 arctan(a) in (0, 2pi); inverse a = -cot(theta/2). */
double dtnlab_cayley_theta_from_a(double a);
double dtnlab_cayley_a_from_theta(double theta);

/* ---- DtN spectrum enumeration ---- */

typedef struct dtnlab_spectrum dtnlab_spectrum;

dtnlab_status dtnlab_spectrum_compute(const dtnlab_domain* domain, double lambda, int index_max,
                                      dtnlab_spectrum** out);
long dtnlab_spectrum_size(const dtnlab_spectrum* spectrum);
/* is_pole != 0 marks branches where lambda^2 is a Dirichlet eigenvalue. */
dtnlab_status dtnlab_spectrum_branch(const dtnlab_spectrum* spectrum, long i, int* index,
                                     int* multiplicity, double* beta, int* is_pole);
void dtnlab_spectrum_free(dtnlab_spectrum* spectrum);

/* ---- counting ---- */

typedef struct dtnlab_count_report {
    long long count;
    double lambda_used;
    double weyl_prediction;
    double rel_discrepancy;
    int pole_warnings;
} dtnlab_count_report;

dtnlab_status dtnlab_count_window(const dtnlab_domain* domain, double lambda, double a1,
                                  double a2, dtnlab_count_report* out);
dtnlab_status dtnlab_count_cayley(const dtnlab_domain* domain, double lambda, double theta1,
                                  double theta2, dtnlab_count_report* out);

dtnlab_status dtnlab_robin_count(const dtnlab_domain* domain, double a, double h,
                                 long long* out);

typedef struct dtnlab_bs_report {
    long long lhs;
    long long rhs;
    int equal;
    int pole_warnings;
    double lambda_used;
} dtnlab_bs_report;

/* Exact integer identity: DtN count in [a1, a2) at lambda versus
 * N_h^-(a2) - N_h^-(a1) at h = 1/lambda. */
dtnlab_status dtnlab_birman_schwinger_check(const dtnlab_domain* domain, double lambda,
                                            double a1, double a2, dtnlab_bs_report* out);

typedef struct dtnlab_weyl_fit_report {
    double fitted_power;
    double fitted_coefficient;
    double reference_power;
    double reference_coefficient;
} dtnlab_weyl_fit_report;

dtnlab_status dtnlab_weyl_fit(const dtnlab_domain* domain, double a1, double a2,
                              const double* lambdas, size_t n_lambdas,
                              dtnlab_weyl_fit_report* out);

/* Window-averaged bulk-subtracted second Weyl term of the Robin count and its
 * kappa(a) vol'(dM) reference. */
dtnlab_status dtnlab_robin_second_term(const dtnlab_domain* domain, double a, double lambda,
                                       int samples, double spread, double* estimate,
                                       double* reference);
dtnlab_status dtnlab_robin_bulk_ratio(const dtnlab_domain* domain, double a, double h,
                                      double* out);

/* Limiting-measure histogram: masses[i] and references[i] must each hold
 * `bins` doubles. */
dtnlab_status dtnlab_measure_histogram(const dtnlab_domain* domain, double lambda,
                                       double theta_lo, double theta_hi, long bins,
                                       double* masses, double* references);

typedef struct dtnlab_dirichlet_report {
    long long robin_count;
    long long dirichlet_count;
    int equal;
    int threshold_warning;
} dtnlab_dirichlet_report;

dtnlab_status dtnlab_dirichlet_limit_check(const dtnlab_domain* domain, double h,
                                           double a_proxy, dtnlab_dirichlet_report* out);

/* Zero-mode multiplicity of the hemisphere DtN operator at lambda_n^2 = n(n+1). */
long long dtnlab_hemisphere_zero_mode_multiplicity(long long n);

#ifdef __cplusplus
}
#endif

#endif /* DTNLAB_H */
