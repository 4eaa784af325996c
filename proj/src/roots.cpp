#include "dtnlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dtnlab::numerics {

BracketedRoot refine_bracket(const std::function<double(double)>& f, double lo, double hi,
                             double f_lo, double f_hi, double rel) {
    if (!(lo < hi)) throw std::invalid_argument("refine_bracket: lo < hi required");
    if (f_lo * f_hi > 0.0) throw std::invalid_argument("refine_bracket: no sign change");
    BracketedRoot out{lo, hi, f_lo, f_hi, 0.0};
    double a = lo, b = hi, fa = f_lo;
    for (int it = 0; it < 200 && (b - a) > rel * std::max({std::abs(a), std::abs(b), 1e-300}); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) {
            a = b = m;
            break;
        }
        if (fa * fm < 0.0) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    out.root = 0.5 * (a + b);
    return out;
}

ScanResult count_sign_changes(const std::function<double(double)>& f, double lo, double hi,
                              int initial_grid) {
    if (!(lo < hi)) throw std::invalid_argument("count_sign_changes: lo < hi required");
    if (initial_grid < 2) throw std::invalid_argument("count_sign_changes: grid too small");

    ScanResult out;
    const double nudge = (hi - lo) * 1e-13;
    // Exact zeros at sample points are nudged off the node so every root shows
    // up as a clean sign change of some cell.
    auto eval = [&](double x) {
        double v = f(x);
        if (v == 0.0) v = f(std::min(x + nudge, hi));
        return v;
    };

    std::vector<double> xs, fs;
    xs.reserve(initial_grid + 1);
    fs.reserve(initial_grid + 1);
    for (int i = 0; i <= initial_grid; ++i) {
        const double x = lo + (hi - lo) * i / initial_grid;
        xs.push_back(x);
        fs.push_back(eval(x));
    }

    long refine_budget = 16L * initial_grid;
    auto handle_cell = [&](double a, double b, double fa, double fb, auto&& self,
                           int depth) -> void {
        if (fa * fb < 0.0) {
            out.roots.push_back(refine_bracket(f, a, b, fa, fb));
            return;
        }
        if (depth >= 3) return;
        // Same-sign cell: a dip toward zero hints at a hidden root pair.
        const bool dips_at_ends = std::min(std::abs(fa), std::abs(fb)) <
                                  0.1 * std::max(std::abs(fa), std::abs(fb));
        if (refine_budget-- <= 0) {
            out.budget_exhausted = true;
            return;
        }
        const double m = 0.5 * (a + b);
        const double fm = eval(m);
        const bool dips_inside = std::abs(fm) < 0.5 * std::min(std::abs(fa), std::abs(fb));
        if (fa * fm < 0.0 || fm * fb < 0.0 || dips_inside || dips_at_ends) {
            self(a, m, fa, fm, self, depth + 1);
            self(m, b, fm, fb, self, depth + 1);
        }
    };

    for (int i = 0; i < initial_grid; ++i)
        handle_cell(xs[i], xs[i + 1], fs[i], fs[i + 1], handle_cell, 0);

    std::sort(out.roots.begin(), out.roots.end(),
              [](const BracketedRoot& a, const BracketedRoot& b) { return a.root < b.root; });
    // Overlapping refinements can rediscover the same root.
    auto last = std::unique(out.roots.begin(), out.roots.end(),
                            [](const BracketedRoot& a, const BracketedRoot& b) {
                                return std::abs(a.root - b.root) <=
                                       1e-11 * std::max({std::abs(a.root), std::abs(b.root), 1.0});
                            });
    out.roots.erase(last, out.roots.end());
    return out;
}

}  // namespace dtnlab::numerics
