#include "hcat/disjointness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "hcat/errors.hpp"
#include "hcat/parallel.hpp"

namespace hcat {

namespace {

void require_d1_above_two(double d1, const char* op) {
    if (!(d1 > 2.0)) throw PreconditionError(std::string(op) + ": requires d1 > 2");
}

// ln sqrt((d2^2 + A)/(d1^2 + A))
double log_ratio(double H, double d1, double d2) {
    const double a = 1.0 - 4.0 * H * H;
    return 0.5 * (std::log(d2 * d2 + a) - std::log(d1 * d1 + a));
}

double j_cap(double H) { return 2.0 * std::numbers::pi * std::sqrt(1.0 - 2.0 * H); }

std::vector<double> scan_grid(double t0, double t1, double step) {
    const auto n = static_cast<std::size_t>(std::ceil((t1 - t0) / step - 1e-9));
    std::vector<double> ts(n + 1);
    for (std::size_t k = 0; k <= n; ++k) ts[k] = std::min(t1, t0 + static_cast<double>(k) * step);
    return ts;
}

std::vector<GapSample> gaps_on(const CmcParams& p1, const CmcParams& p2,
                               const std::vector<double>& ts, const Tolerances& tol) {
    std::vector<GapSample> out(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        out[i] = {ts[i], b_inverse(p2, ts[i], tol) - b_inverse(p1, ts[i], tol)};
    });
    return out;
}

// Radius where |g_d| first drops to `level`; g_d rises monotonically to 0.
double decay_radius(const CmcParams& p, double level) {
    auto excess = [&](double rho) { return std::abs(g_residual(p, rho)) - level; };
    const double eta = p.neck();
    if (excess(eta) <= 0.0) return eta;
    double lo = eta, hi = eta + 1.0;
    while (excess(hi) > 0.0) {
        lo = hi;
        hi = eta + 2.0 * (hi - eta);
        if (hi > 1e4) throw ConvergenceError("asymptotic_height: residual does not decay");
    }
    std::uintmax_t iters = 200;
    const boost::math::tools::eps_tolerance<double> stop(40);
    const auto [a, b] = boost::math::tools::toms748_solve(excess, lo, hi, stop, iters);
    return b;
}

}  // namespace

double d0_equation_lhs(double H, double d1, double d0_candidate) {
    require_d1_above_two(d1, "d0_equation_lhs");
    if (!(d0_candidate >= d1)) throw PreconditionError("d0_equation_lhs: requires d0 >= d1");
    const CmcParams check(H, d1);  // validates H
    const double a = check.one_minus_4h2();
    return std::sqrt(a) / (4.0 * H) * (log_ratio(H, d1, d0_candidate) - 2.0 * j_cap(H));
}

double solve_d0(double H, double d1) {
    require_d1_above_two(d1, "solve_d0");
    auto residual = [&](double d) { return d0_equation_lhs(H, d1, d) - 1.0; };
    double lo = d1;
    double hi = 2.0 * d1;
    while (residual(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi)) throw ConvergenceError("solve_d0: bracket overflow");
    }
    for (int i = 0; i < 2000; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (residual(mid) < 0.0 ? lo : hi) = mid;
    }
    return std::abs(residual(lo)) < std::abs(residual(hi)) ? lo : hi;
}

double gap(double H, double d1, double d2, double t, const Tolerances& tol) {
    if (!(d1 > -2.0 * H && d1 < d2)) throw PreconditionError("gap: requires -2H < d1 < d2");
    return b_inverse(CmcParams(H, d2), t, tol) - b_inverse(CmcParams(H, d1), t, tol);
}

double separation_lower_bound(double H, double d1, double d2) {
    require_d1_above_two(d1, "separation_lower_bound");
    if (!(d2 >= d1)) throw PreconditionError("separation_lower_bound: requires d2 >= d1");
    const double a = CmcParams(H, d1).one_minus_4h2();
    return std::sqrt(a) / (2.0 * H) * (0.5 * log_ratio(H, d1, d2) - j_cap(H));
}

double asymptotic_height(double H, double d1, double d2, const Tolerances& tol) {
    const double eps = 0.25 * log_ratio(H, d1, d2);
    double t = 0.0;
    for (double d : {d1, d2}) {
        const CmcParams p(H, d);
        t = std::max(t, lambda(p, decay_radius(p, 0.25 * eps), tol));
    }
    return t;
}

double default_t_max(double H, double d1, double d2, const Tolerances& tol) {
    return std::max(50.0, asymptotic_height(H, d1, d2, tol));
}

DisjointnessCertificate certify(double H, double d1, double d2, double t_max,
                                const CertifyOptions& options) {
    require_d1_above_two(d1, "certify");
    if (!(d2 > d1)) throw PreconditionError("certify: requires d2 > d1");
    if (!(t_max > 0.0)) throw PreconditionError("certify: requires t_max > 0");
    if (!(options.grid_step > 0.0)) throw PreconditionError("certify: requires grid_step > 0");
    if (options.refinement < 1) throw PreconditionError("certify: refinement must be >= 1");

    const CmcParams p1(H, d1);
    const CmcParams p2(H, d2);
    const Tolerances& tol = options.tolerances;

    DisjointnessCertificate cert;
    cert.H = H;
    cert.d1 = d1;
    cert.d2 = d2;
    const double threshold = solve_d0(H, d1);
    if (options.d2_is_threshold) cert.d0 = threshold;
    cert.beyond_lemma = d2 < threshold;
    cert.t_max = t_max;
    cert.grid_step = options.grid_step;
    cert.monotone_tolerance = options.monotone_tolerance;
    cert.tolerances = tol;
    cert.neck_gap = p2.neck() - p1.neck();

    cert.scan = gaps_on(p1, p2, scan_grid(0.0, t_max, options.grid_step), tol);

    for (const GapSample& s : cert.scan) {
        if (!(s.gap > 0.0)) throw CertificationFailure("gap is not positive", s.t, s.gap);
    }
    cert.max_increment = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < cert.scan.size(); ++k) {
        const double inc = cert.scan[k].gap - cert.scan[k - 1].gap;
        cert.max_increment = std::max(cert.max_increment, inc);
        if (inc > options.monotone_tolerance) {
            throw CertificationFailure("gap increases for t > 0", cert.scan[k].t, inc);
        }
    }
    cert.monotone_decreasing = true;
    cert.sup_gap = cert.scan.front().gap;

    const auto lowest = std::min_element(cert.scan.begin(), cert.scan.end(),
                                         [](const GapSample& a, const GapSample& b) { return a.gap < b.gap; });
    const double step = options.grid_step;
    const double fine_lo = std::max(0.0, lowest->t - step);
    const double fine_hi = std::min(t_max, lowest->t + step);
    cert.min_gap_observed = lowest->gap;
    cert.min_gap_t = lowest->t;
    if (fine_hi > fine_lo) {
        cert.refined = gaps_on(p1, p2, scan_grid(fine_lo, fine_hi, step / options.refinement), tol);
        for (const GapSample& s : cert.refined) {
            if (!(s.gap > 0.0)) throw CertificationFailure("gap is not positive", s.t, s.gap);
            if (s.gap < cert.min_gap_observed) {
                cert.min_gap_observed = s.gap;
                cert.min_gap_t = s.t;
            }
        }
    }

    cert.asymptotic_bound = separation_lower_bound(H, d1, d2);
    cert.delta0 = cert.min_gap_observed;
    if (cert.asymptotic_bound > 0.0) {
        cert.delta0 = std::min(cert.delta0, cert.asymptotic_bound);
        cert.asymptotic_consistent = cert.scan.back().gap - cert.asymptotic_bound >= -1e-6;
    }
    if (!(cert.delta0 > 0.0)) {
        throw CertificationFailure("certified gap is not positive", cert.min_gap_t, cert.delta0);
    }
    return cert;
}

}  // namespace hcat
