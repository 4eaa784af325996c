#pragma once

#include <stdexcept>

namespace dtnlab::numerics {

// Shared accuracy knobs for quadrature and root refinement.
struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-13;
    int max_depth = 48;

    void validate() const {
        if (!(rel > 0.0)) throw std::invalid_argument("Tolerance: rel must be > 0");
        if (!(abs >= 0.0)) throw std::invalid_argument("Tolerance: abs must be >= 0");
        if (max_depth < 1) throw std::invalid_argument("Tolerance: max_depth must be >= 1");
    }
};

// Thrown when an adaptive scheme runs out of budget; carries the best estimate.
class NonConvergenceError : public std::runtime_error {
  public:
    NonConvergenceError(const std::string& what, double best, double error_bound)
        : std::runtime_error(what), best_estimate(best), error_bound(error_bound) {}
    double best_estimate;
    double error_bound;
};

}  // namespace dtnlab::numerics
