#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "morlicz/errors.hpp"

namespace morlicz {

struct bisect_options {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iter = 200;
};

// Finds t in [lo, hi] with f(t) = target for nondecreasing f,
// assuming f(lo) <= target <= f(hi).
template <class F>
double bisect_increasing(F&& f, double target, double lo, double hi,
                         bisect_options opt = {}) {
    for (int i = 0; i < opt.max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval exhausted in floating point
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= opt.abs_tol + opt.rel_tol * std::abs(hi)) break;
    }
    return 0.5 * (lo + hi);
}

// Grows hi geometrically from hi0 until f(hi) >= target, then bisects.
// Throws divergence_error if the bracket passes cap without capturing target.
template <class F>
double invert_increasing(F&& f, double target, double hi0 = 1.0,
                         double cap = 1e30, bisect_options opt = {}) {
    if (!(target > 0.0)) return 0.0;
    double hi = hi0 > 0.0 ? hi0 : 1.0;
    double lo = 0.0;
    while (f(hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > cap)
            throw divergence_error("bracket exceeded cap while inverting monotone function");
    }
    return bisect_increasing(f, target, lo, hi, opt);
}

} // namespace morlicz
