#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hcat/errors.hpp"

namespace hcat::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;  // sum of |K21 - G10| over accepted panels
    int panels = 0;
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// 21-point Kronrod rule with its embedded 10-point Gauss rule on [a, b].
template <class F>
Panel gk21(F& f, double a, double b) {
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
    using Gauss = boost::math::quadrature::gauss<double, 10>;
    const auto& x = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = wk[0] * f(mid);
    double gauss = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double pair = f(mid + half * x[i]) + f(mid - half * x[i]);
        kronrod += wk[i] * pair;
        if (i % 2 == 1) gauss += wg[i / 2] * pair;
    }
    return {a, b, half * kronrod, std::abs(half * (kronrod - gauss))};
}

/// Globally adaptive Gauss-Kronrod: bisects the worst panel until the summed
/// error estimate drops below `abs_tol`. The integrand must be finite on [a, b].
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol, int max_panels = 4000) {
    if (a == b) return {};
    if (b < a) {
        Result r = integrate(f, b, a, abs_tol, max_panels);
        r.value = -r.value;
        return r;
    }
    std::priority_queue<Panel> heap;
    Panel first = gk21(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);
    int panels = 1;
    while (error > abs_tol) {
        if (panels >= max_panels) {
            throw ConvergenceError("adaptive quadrature: panel budget exhausted");
        }
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push(worst);  // panel cannot be split further
            break;
        }
        const Panel left = gk21(f, worst.a, mid);
        const Panel right = gk21(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    // Re-sum from the panels to shed the drift of the running updates.
    total = 0.0;
    error = 0.0;
    std::vector<Panel> done;
    done.reserve(heap.size());
    while (!heap.empty()) {
        done.push_back(heap.top());
        heap.pop();
    }
    std::sort(done.begin(), done.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const Panel& p : done) {
        total += p.value;
        error += p.error;
    }
    return {total, error, panels};
}

}  // namespace hcat::quad
