#pragma once

// Adaptive Gauss–Kronrod integration for the ordering-probability integrals.
//
// All integrands here are products of densities and distribution functions
// on (0, ∞); they are mapped onto (0,1) by t = u/(1-u) and integrated with
// the 15-point Gauss–Kronrod panel rule under global adaptive bisection:
// the panel with the largest error estimate is split until the summed
// estimate meets the absolute tolerance or the subdivision budget runs out,
// in which case QuadratureFailure reports the achieved error. Splitting the
// worst panel first is what lets integrable endpoint singularities (Weibull
// densities with α < 1) converge inside the budget.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bp/errors.hpp"

namespace bp {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    std::size_t max_panels = 100000;  // subdivision budget
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

namespace detail {

struct QuadPanel {
    double error = 0.0;
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    bool operator<(const QuadPanel& rhs) const { return error < rhs.error; }
};

inline double neumaier_sum(const std::vector<QuadPanel>& panels, double QuadPanel::*field) {
    double sum = 0.0, comp = 0.0;
    for (const QuadPanel& p : panels) {
        const double term = p.*field;
        const double s = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - s) + term;
        else
            comp += (term - s) + sum;
        sum = s;
    }
    return sum + comp;
}

}  // namespace detail

template <typename F>
QuadratureResult integrate_unit_interval(F&& f, const QuadratureOptions& opts = {}) {
    using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    auto eval_panel = [&](double a, double b) {
        // max_depth 0 gives the plain panel rule; the reported |K - G| is on
        // the unit interval and scales with the panel half-width.
        double err = 0.0;
        const double value = Rule::integrate(f, a, b, 0, 0.0, &err);
        // A panel whose weighted sums overflow gets a huge finite error so
        // the loop keeps isolating it and the failure report stays finite.
        if (!std::isfinite(value) || !std::isfinite(err))
            return detail::QuadPanel{1e30, a, b, 0.0};
        return detail::QuadPanel{0.5 * (b - a) * err, a, b, value};
    };

    std::vector<detail::QuadPanel> heap{eval_panel(0.0, 1.0)};
    double total_error = heap.front().error;
    while (total_error > opts.abs_tol && heap.size() < opts.max_panels) {
        std::pop_heap(heap.begin(), heap.end());
        const detail::QuadPanel worst = heap.back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            std::push_heap(heap.begin(), heap.end());
            break;  // interval at floating-point resolution
        }
        heap.pop_back();
        total_error -= worst.error;
        for (const auto& half : {eval_panel(worst.a, mid), eval_panel(mid, worst.b)}) {
            heap.push_back(half);
            std::push_heap(heap.begin(), heap.end());
            total_error += half.error;
        }
    }

    QuadratureResult r;
    r.value = detail::neumaier_sum(heap, &detail::QuadPanel::value);
    r.error_estimate = detail::neumaier_sum(heap, &detail::QuadPanel::error);
    if (!(r.error_estimate <= opts.abs_tol)) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "quadrature tolerance %.3e unreachable within a budget of %zu panels; "
                      "achieved %.3e",
                      opts.abs_tol, opts.max_panels, r.error_estimate);
        throw QuadratureFailure(msg, r.error_estimate);
    }
    return r;
}

// ∫_0^∞ g(t) dt with the substitution t = u/(1-u).
template <typename F>
QuadratureResult integrate_halfline(F&& g, const QuadratureOptions& opts = {}) {
    auto transformed = [&g](double u) {
        const double om = 1.0 - u;
        const double t = u / om;
        const double v = g(t) / (om * om);
        return std::isfinite(v) ? v : 0.0;  // over/underflowed tails
    };
    return integrate_unit_interval(transformed, opts);
}

}  // namespace bp
