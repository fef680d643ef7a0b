#include "hcat/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hcat/errors.hpp"
#include "hcat/parallel.hpp"

namespace hcat {

std::vector<double> appendix_grid(const CmcParams& p, const AppendixOptions& o) {
    if (o.points < 2) throw PreconditionError("appendix grid: need at least 2 points");
    std::vector<double> rhos(static_cast<std::size_t>(o.points));
    const double lo = p.neck() + o.first_offset;
    const double hi = p.neck() + o.span;
    for (int k = 0; k < o.points; ++k) rhos[k] = lo + (hi - lo) * k / (o.points - 1);
    return rhos;
}

AppendixCase verify_appendix_case(double H, double d, const AppendixOptions& o) {
    const CmcParams p(H, d);
    const auto rhos = appendix_grid(p, o);
    AppendixCase c;
    c.H = H;
    c.d = d;
    c.neck = p.neck();
    c.j_bound = 2.0 * std::numbers::pi * std::sqrt(1.0 - 2.0 * H);

    for (double rho : rhos) {
        const double lam = lambda(p, rho, o.tolerances);
        const double j = j_remainder(p, rho, o.tolerances);
        c.decomposition_error = std::max(c.decomposition_error,
                                         std::abs(lam - f_closed(p, rho) - j) / std::max(1.0, lam));
        c.j_sup = std::max(c.j_sup, j);
    }
    c.j_sup = std::max(c.j_sup, j_remainder(p, p.neck() + o.far_offset, o.tolerances));
    c.j_margin = c.j_bound - c.j_sup;
    c.tighter_bound_held = c.j_sup < 0.5 * c.j_bound;

    const double h = o.derivative_step;
    for (std::size_t k = 1; k + 1 < rhos.size(); ++k) {
        const double rho = rhos[k];
        if (rho - p.neck() < o.derivative_offset) continue;
        const double fd = (f_closed(p, rho + h) - f_closed(p, rho - h)) / (2.0 * h);
        const double exact = f_integrand(p, rho);
        c.derivative_error = std::max(c.derivative_error, std::abs(fd - exact) / std::abs(exact));
        ++c.derivative_points;
    }

    c.g_decay_monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (double rho : rhos) {
        if (rho - p.neck() < 1.0) continue;
        const double g = std::abs(g_residual(p, rho));
        c.g_decay_monotone = c.g_decay_monotone && g < prev;
        prev = g;
    }
    c.g_at_far = g_residual(p, p.neck() + 20.0);

    if (d > 2.0) {
        const JBoundWitness w = j_bound_witness(p);
        c.witness_checked = true;
        c.alpha = w.alpha;
        c.beta = w.beta;
        c.omega = w.omega;
        c.omega_inequality = 2.0 * w.omega > d / (1.0 - 2.0 * H) && w.beta < 0.0 && w.alpha > 0.0;
    }

    c.passed = c.decomposition_error <= o.decomposition_tol && c.derivative_error <= o.derivative_tol &&
               c.g_decay_monotone && (!c.witness_checked || (c.j_margin > 0.0 && c.omega_inequality));
    return c;
}

std::vector<AppendixCase> verify_appendix(const std::vector<double>& Hs, const std::vector<double>& ds,
                                          const AppendixOptions& o) {
    std::vector<AppendixCase> out(Hs.size() * ds.size());
    parallel_for(out.size(), [&](std::size_t i) {
        out[i] = verify_appendix_case(Hs[i / ds.size()], ds[i % ds.size()], o);
    });
    return out;
}

}  // namespace hcat
