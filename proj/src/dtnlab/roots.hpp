#pragma once

#include <functional>
#include <vector>

namespace dtnlab::numerics {

// A sign-change interval refined to a root.  Invariant: lo < hi,
// f_lo * f_hi <= 0, lo <= root <= hi.
struct BracketedRoot {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
    double root = 0.0;
};

struct ScanResult {
    std::vector<BracketedRoot> roots;  // sorted by position
    bool budget_exhausted = false;
};

// Bisect a sign-change bracket down to relative width `rel`.
BracketedRoot refine_bracket(const std::function<double(double)>& f, double lo, double hi,
                             double f_lo, double f_hi, double rel = 1e-12);

// Scan f on a uniform grid of `initial_grid` cells, refine every sign change,
// and re-scan cells whose same-sign values dip toward zero (a parabola through
// three consecutive samples crossing zero hints at a hidden root pair).
ScanResult count_sign_changes(const std::function<double(double)>& f, double lo, double hi,
                              int initial_grid);

}  // namespace dtnlab::numerics
