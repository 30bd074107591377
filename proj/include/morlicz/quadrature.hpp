#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "morlicz/errors.hpp"

namespace morlicz {

struct quad_result {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
    bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1]: node, Gauss weight, Kronrod weight.
inline constexpr double gk15_nodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
std::pair<double, double> gk15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double y0 = f(mid);
    double g7 = gk15_nodes[0][1] * y0;
    double k15 = gk15_nodes[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * gk15_nodes[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g7 += gk15_nodes[i][1] * yi;
        k15 += gk15_nodes[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    double err = std::abs(g7 - k15);
    err = 200.0 * err * std::sqrt(200.0 * err);
    return {k15, std::min(err, std::abs(g7 - k15) * 200.0)};
}

} // namespace detail

// Adaptive bisection with a hard interval cap. Open rule: endpoints are
// never evaluated, so integrable endpoint singularities are admissible.
template <class F>
quad_result integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                               double abs_tol = 1e-14, int max_intervals = 4000) {
    quad_result out;
    if (!(b > a)) {
        out.converged = true;
        return out;
    }
    struct seg {
        double a, b, value, error;
    };
    std::vector<seg> work;
    auto [v0, e0] = detail::gk15(f, a, b);
    work.push_back({a, b, v0, e0});
    out.intervals = 1;

    double total = v0, total_err = e0;
    while (total_err > abs_tol + rel_tol * std::abs(total) &&
           out.intervals < max_intervals) {
        // split the worst segment
        std::size_t worst = 0;
        for (std::size_t i = 1; i < work.size(); ++i)
            if (work[i].error > work[worst].error) worst = i;
        const seg s = work[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) break; // cannot refine further
        auto [vl, el] = detail::gk15(f, s.a, mid);
        auto [vr, er] = detail::gk15(f, mid, s.b);
        work[worst] = {s.a, mid, vl, el};
        work.push_back({mid, s.b, vr, er});
        ++out.intervals;
        total = 0.0;
        total_err = 0.0;
        for (const seg& w : work) {
            total += w.value;
            total_err += w.error;
        }
    }
    out.value = total;
    out.error_estimate = total_err;
    out.converged = total_err <= abs_tol + rel_tol * std::abs(total);
    if (!std::isfinite(out.value)) out.converged = false;
    return out;
}

// Integral over (0, s] of g(tau) with an integrable singularity at tau = 0,
// computed through the substitution tau = sigma^m.
template <class F>
quad_result integrate_power_substitution(F&& g, double s, int m, double rel_tol = 1e-10,
                                         int max_intervals = 4000) {
    const double upper = std::pow(s, 1.0 / static_cast<double>(m));
    auto transformed = [&](double sigma) {
        const double tau = std::pow(sigma, static_cast<double>(m));
        return g(tau) * static_cast<double>(m) * std::pow(sigma, static_cast<double>(m - 1));
    };
    return integrate_adaptive(transformed, 0.0, upper, rel_tol, 1e-300, max_intervals);
}

} // namespace morlicz
