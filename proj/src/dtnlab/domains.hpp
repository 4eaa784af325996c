#pragma once

#include <stdexcept>
#include <vector>

namespace dtnlab::domains {

class UnsupportedDomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class Kind { disk, ball, rectangle, hemisphere, interval };

// Tagged model geometry carrying dimension and the volumes entering the Weyl
// terms.  Interval exists only for 1D solver tests.
class ModelDomain {
  public:
    static ModelDomain disk(double radius);
    static ModelDomain ball(double radius);
    static ModelDomain rectangle(double l1, double l2);
    static ModelDomain hemisphere();
    static ModelDomain interval(double length);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    double volume() const { return volume_; }
    double boundary_volume() const { return boundary_volume_; }
    double radius() const;
    double l1() const;
    double l2() const;
    double length() const;

    bool supports_dtn() const { return kind_ == Kind::disk || kind_ == Kind::ball; }
    bool supports_robin() const {
        return kind_ == Kind::disk || kind_ == Kind::ball || kind_ == Kind::rectangle;
    }

  private:
    ModelDomain() = default;
    Kind kind_ = Kind::disk;
    int dim_ = 2;
    double volume_ = 0.0;
    double boundary_volume_ = 0.0;
    double p1_ = 0.0;  // radius / l1 / length
    double p2_ = 0.0;  // l2
};

// One separation-of-variables branch of the semiclassical DtN operator.
struct Branch {
    int index = 0;
    int multiplicity = 1;
    double beta = 0.0;
    bool pole = false;  // lambda^2 is a Dirichlet eigenvalue on this branch
};

// Disk branch: u = J_n(lambda r) e^{i n phi}.  The interior normal at r = R
// is -d/dr, so R(lambda) f = -d_nu u = +d_r u and
//   beta_n = J_n'(lambda R)/J_n(lambda R).
// The sign is pinned by the Neumann test: beta_n = 0 exactly at zeros of J_n'.
Branch dtn_disk_branch(double radius, double lambda, int n);

// Ball branch, beta_l = j_l'(lambda R)/j_l(lambda R), multiplicity 2l+1.
Branch dtn_ball_branch(double radius, double lambda, int l);

Branch dtn_branch(const ModelDomain& domain, double lambda, int index);

// Branch table for index 0..index_max (CLI spectrum output).
std::vector<Branch> dtn_spectrum_enumerate(const ModelDomain& domain, double lambda,
                                           int index_max);

struct WindowSpectrum {
    std::vector<Branch> inside;  // branches with beta in [a1, a2), by index
    long long count = 0;         // sum of multiplicities
    double lambda_used = 0.0;    // perturbed by 1e-9 relative per pole hit
    int pole_warnings = 0;
};

// All DtN eigenvalues in [a1, a2).  The index cutoff starts at
// ceil(lambda R (1 + max|a_j|)) + 20 and extends until five consecutive
// branches sit above the window with the increasing-tail invariant checked.
WindowSpectrum dtn_spectrum_window(const ModelDomain& domain, double lambda, double a1,
                                   double a2);

// 1D Robin problem for -h^2 u'' on [0, L], (h u' + a u)(0) = 0,
// (-h u' + a u)(L) = 0.  Oscillatory eigenvalues mu = (hk)^2 solve
//   (h^2 k^2 - a^2) sin(kL) + 2 a h k cos(kL) = 0,
// trapped ones mu = -(h kappa)^2 (a > 0 only) solve tanh(kappa L/2) = a/(h kappa)
// (even) and tanh(kappa L/2) = h kappa / a (odd, present iff aL > 2h);
// mu = 0 is an eigenvalue exactly when a = 0 (constant) or aL = 2h.
struct Spectrum1D {
    std::vector<double> eigenvalues;  // sorted, strictly below the bound
    int trapped_count = 0;
};
Spectrum1D robin_1d_spectrum(double a, double h, double L, double mu_max);
long long robin_1d_count(double a, double h, double L, double tau);

// Number of negative eigenvalues of h^2 Delta - 1 under (h d_nu + a) u = 0.
long long robin_count(const ModelDomain& domain, double a, double h);

// Number of Dirichlet frequencies lambda_j <= 1/h (independent count used by
// the a -> -inf cross-check).
long long dirichlet_count(const ModelDomain& domain, double h);

// Hemisphere DtN zero-mode multiplicity at lambda_n^2 = n(n+1): the spherical
// harmonics Y_n^m with n+m even have vanishing normal derivative and
// nonvanishing trace on the equator, giving n+1 modes.
long long hemisphere_zero_mode_multiplicity(long long n);

}  // namespace dtnlab::domains
