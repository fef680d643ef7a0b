#include "hcat/catenoid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "hcat/errors.hpp"
#include "hcat/quadrature.hpp"
#include "hcat/special.hpp"

namespace hcat {

namespace {

// Below this radius the entire-graph slope is taken from its Taylor series,
// H r (1 + (6H^2 - 1) r^2 / 12), instead of the 0/0 quotient.
constexpr double kSeriesRadius = 1e-4;

// Past neck + 1 every quotient is divided through by cosh r so nothing
// overflows for large radii.
constexpr double kFarOffset = 1.0;

double entire_series(double H, double r) {
    return H * r * (1.0 + (6.0 * H * H - 1.0) * r * r / 12.0);
}

// Numerators of the three integrands. `near` is the plain value, `far` the
// value divided by c = cosh r.
struct LambdaNumerator {
    const CmcParams& p;
    double near(double r) const {
        const double sh = std::sinh(0.5 * r);
        return p.excess() + 4.0 * p.H() * sh * sh;  // d + 2H cosh r
    }
    double far(double, double c) const { return p.d() / c + 2.0 * p.H(); }
};

struct FNumerator {
    const CmcParams& p;
    double near(double r) const { return 2.0 * p.H() * std::sinh(r); }
    double far(double r, double) const { return 2.0 * p.H() * std::tanh(r); }
};

struct JNumerator {
    const CmcParams& p;
    double near(double r) const { return p.d() + 2.0 * p.H() * std::exp(-r); }
    double far(double r, double c) const { return (p.d() + 2.0 * p.H() * std::exp(-r)) / c; }
};

// numerator / sqrt((1 - 4H^2)(cosh r - alpha)(cosh r - beta)) for r > neck.
template <class Num>
double quotient(const CmcParams& p, double r, const Num& num) {
    const double eta = p.neck();
    if (!(r > eta)) {
        throw DomainError("integrand: radius " + std::to_string(r) +
                          " is not above the neck " + std::to_string(eta));
    }
    const double a = p.one_minus_4h2();
    if (r - eta <= kFarOffset) {
        const double c_minus_alpha = cosh_diff(r, eta);
        const double radicand = a * c_minus_alpha * (std::cosh(r) - p.beta());
        if (!(radicand > 0.0)) throw DomainError("integrand: radicand is not positive");
        return num.near(r) / std::sqrt(radicand);
    }
    const double c = std::cosh(r);
    return num.far(r, c) / std::sqrt(a * (1.0 - p.alpha() / c) * (1.0 - p.beta() / c));
}

// Integrand after r = neck + u^2, i.e. 2u * quotient(neck + u^2). Bounded at u = 0.
template <class Num>
double substituted(const CmcParams& p, double u, const Num& num) {
    const double eta = p.neck();
    const double a = p.one_minus_4h2();
    const double u2 = u * u;
    const double r = eta + u2;
    if (u2 <= kFarOffset) {
        if (u == 0.0) {
            if (p.is_entire_graph()) return 0.0;
            return 2.0 * num.near(eta) /
                   std::sqrt(a * std::sinh(eta) * (p.alpha() - p.beta()));
        }
        const double x = 0.5 * u2;
        const double sinhc = x < 1e-8 ? 1.0 + x * x / 6.0 : std::sinh(x) / x;
        // cosh r - alpha = u^2 sinh(neck + x) sinhc(x)
        const double s = std::sinh(eta + x);
        if (s == 0.0) return 0.0;
        return 2.0 * num.near(r) / std::sqrt(a * s * sinhc * (std::cosh(r) - p.beta()));
    }
    const double c = std::cosh(r);
    return 2.0 * u * num.far(r, c) /
           std::sqrt(a * (1.0 - p.alpha() / c) * (1.0 - p.beta() / c));
}

double lambda_substituted(const CmcParams& p, double u) {
    if (p.is_entire_graph()) {
        const double r = u * u;
        if (r < kSeriesRadius) return 2.0 * u * entire_series(p.H(), r);
    }
    return substituted(p, u, LambdaNumerator{p});
}

// Integral of `f` over u in [u0, u1], split where the evaluation branch changes.
template <class F>
double integrate_u(F&& f, double u0, double u1, double abs_tol) {
    if (u1 <= u0) return 0.0;
    std::vector<double> cuts{u0};
    for (double c : {std::sqrt(kSeriesRadius), std::sqrt(kFarOffset)}) {
        if (c > u0 && c < u1) cuts.push_back(c);
    }
    cuts.push_back(u1);
    const double per = abs_tol / static_cast<double>(cuts.size() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += quad::integrate(f, cuts[i], cuts[i + 1], per).value;
    }
    return total;
}

double lambda_u(const CmcParams& p, double u0, double u1, double abs_tol) {
    return integrate_u([&p](double u) { return lambda_substituted(p, u); }, u0, u1, abs_tol);
}

void require_catenoid(const CmcParams& p, const char* op) {
    if (p.is_entire_graph()) {
        throw PreconditionError(std::string(op) + ": requires d > -2H");
    }
}

void require_above_neck(const CmcParams& p, double rho, const char* op) {
    if (!(rho >= p.neck())) {
        throw DomainError(std::string(op) + ": rho " + std::to_string(rho) +
                          " is below the neck " + std::to_string(p.neck()));
    }
}

// acosh of the f_closed argument minus (rho + ln(A / S)), exact for rho > neck + 1.
double f_tail(const CmcParams& p, double rho) {
    const double a = p.one_minus_4h2();
    const double dh4 = 4.0 * p.d() * p.H();
    const double em = std::exp(-rho);
    const double e2m = em * em;
    const double shift = std::log1p(e2m - dh4 * em / a);
    const double inv_x = 2.0 * p.root_disc() * em / (a * (1.0 + e2m) - dh4 * em);
    const double v = inv_x * inv_x;
    const double bend = std::log1p(-v / (2.0 * (1.0 + std::sqrt(1.0 - v))));
    return shift + bend;
}

}  // namespace

CmcParams::CmcParams(double H, double d) : H_(H), d_(d) {
    if (!(H > 0.0 && H < 0.5)) throw PreconditionError("CmcParams: H must lie in (0, 1/2)");
    if (!std::isfinite(d)) throw PreconditionError("CmcParams: d must be finite");
    excess_ = d + 2.0 * H;
    if (excess_ < 0.0) {
        if (excess_ < -4.0 * std::numeric_limits<double>::epsilon()) {
            throw PreconditionError("CmcParams: d must be >= -2H");
        }
        excess_ = 0.0;
        d_ = -2.0 * H;
    }
    a_ = 1.0 - 4.0 * H * H;
    s_ = std::sqrt(d_ * d_ + a_);
    // alpha - 1 = (d + 2H)(2H + (d - 2H)/(S + 1)) / A, exactly zero on the entire graph
    const double alpha_m1 = excess_ * (2.0 * H + (d_ - 2.0 * H) / (s_ + 1.0)) / a_;
    alpha_ = 1.0 + alpha_m1;
    beta_ = (2.0 * d_ * H - s_) / a_;
    eta_ = acosh1p(alpha_m1);
}

double CmcParams::slope() const noexcept { return 2.0 * H_ / std::sqrt(a_); }

double necksize(const CmcParams& p) { return p.neck(); }

double integrand(const CmcParams& p, double r) {
    if (p.is_entire_graph() && r > 0.0 && r < kSeriesRadius) return entire_series(p.H(), r);
    return quotient(p, r, LambdaNumerator{p});
}

double f_integrand(const CmcParams& p, double r) { return quotient(p, r, FNumerator{p}); }

double j_integrand(const CmcParams& p, double r) { return quotient(p, r, JNumerator{p}); }

double lambda(const CmcParams& p, double rho, const Tolerances& tol) {
    require_above_neck(p, rho, "lambda");
    return lambda_u(p, 0.0, std::sqrt(rho - p.neck()), tol.quad_abs);
}

double f_closed(const CmcParams& p, double rho) {
    require_catenoid(p, "f_closed");
    constexpr double slack = 1e-12;
    if (rho - p.neck() > kFarOffset) {
        const double base = rho + std::log(p.one_minus_4h2() / p.root_disc());
        return p.slope() * (base + f_tail(p, rho));
    }
    // argument - 1 = (1 - 4H^2)(cosh rho - alpha) / sqrt(d^2 + 1 - 4H^2)
    const double y = p.one_minus_4h2() * cosh_diff(rho, p.neck()) / p.root_disc();
    if (y < -slack) throw DomainError("f_closed: arccosh argument below 1");
    return p.slope() * acosh1p(std::max(y, 0.0));
}

double g_residual(const CmcParams& p, double rho) {
    require_catenoid(p, "g_residual");
    if (rho - p.neck() > kFarOffset) return p.slope() * f_tail(p, rho);
    const double base = rho + std::log(p.one_minus_4h2() / p.root_disc());
    return f_closed(p, rho) - p.slope() * base;
}

double j_remainder(const CmcParams& p, double rho, const Tolerances& tol) {
    require_catenoid(p, "j_remainder");
    require_above_neck(p, rho, "j_remainder");
    const JNumerator num{p};
    return integrate_u([&](double u) { return substituted(p, u, num); }, 0.0,
                       std::sqrt(rho - p.neck()), tol.quad_abs);
}

JBoundWitness j_bound_witness(const CmcParams& p) {
    if (!(p.d() > 2.0)) throw PreconditionError("j_bound_witness: requires d > 2");
    JBoundWitness w{};
    w.alpha = p.alpha();
    w.beta = p.beta();
    w.omega = p.alpha() - 1.0;
    w.bound = 2.0 * std::numbers::pi * std::sqrt(1.0 - 2.0 * p.H());
    if (std::abs(w.alpha - std::cosh(p.neck())) > 1e-10 * w.alpha) {
        throw ConvergenceError("j_bound_witness: alpha disagrees with cosh(neck)");
    }
    return w;
}

double b_inverse(const CmcParams& p, double t, const Tolerances& tol) {
    require_catenoid(p, "b_inverse");
    const double target = std::abs(t);
    const double eta = p.neck();
    if (target == 0.0) return eta;

    // Work in u = sqrt(rho - neck): lambda is smooth there, with finite slope at u = 0.
    double lo = 0.0, hi = 1.0;
    double f_lo = -target;
    double f_hi = lambda_u(p, 0.0, hi, tol.quad_abs) - target;
    while (f_hi < 0.0) {
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        if (eta + hi * hi > tol.rho_max) {
            throw ConvergenceError("b_inverse: bracket exceeded rho_max for t = " +
                                   std::to_string(t));
        }
        f_hi = f_lo + lambda_u(p, lo, hi, tol.quad_abs);
    }
    auto residual = [&](double u) { return lambda_u(p, 0.0, u, tol.quad_abs) - target; };
    // Re-evaluate the bracket ends from zero so the solver sees one consistent function.
    if (lo > 0.0) f_lo = residual(lo);
    f_hi = residual(hi);
    if (f_hi == 0.0) return eta + hi * hi;
    if (f_lo >= 0.0) return eta + lo * lo;
    std::uintmax_t iters = 200;
    const boost::math::tools::eps_tolerance<double> stop(std::numeric_limits<double>::digits - 4);
    const auto [a, b] = boost::math::tools::toms748_solve(residual, lo, hi, f_lo, f_hi, stop, iters);
    const double u = 0.5 * (a + b);
    if ((b - a) * (a + b) > tol.root) {
        throw ConvergenceError("b_inverse: root bracket wider than tolerance");
    }
    return eta + u * u;
}

ProfileCurve profile(const CmcParams& p, double rho_max, int n, const Tolerances& tol) {
    if (n < 2) throw PreconditionError("profile: need at least two samples");
    if (!(rho_max > p.neck())) throw PreconditionError("profile: rho_max must exceed the neck");
    const double eta = p.neck();
    const double u_max = std::sqrt(rho_max - eta);
    std::vector<ProfileSample> samples;
    samples.reserve(static_cast<std::size_t>(n));
    samples.push_back({eta, 0.0});
    double u_prev = 0.0;
    double t = 0.0;
    for (int k = 1; k < n; ++k) {
        // uniform in u = sqrt(rho - neck), i.e. square-root grading toward the neck
        const double u = u_max * static_cast<double>(k) / static_cast<double>(n - 1);
        t += lambda_u(p, u_prev, u, tol.quad_abs / static_cast<double>(n - 1));
        samples.push_back({k == n - 1 ? rho_max : eta + u * u, t});
        u_prev = u;
    }
    return ProfileCurve(p, std::move(samples), tol);
}

ProfileCurve entire_graph_profile(double H, double rho_max, int n, const Tolerances& tol) {
    return profile(CmcParams(H, -2.0 * H), rho_max, n, tol);
}

ProfileCurve::ProfileCurve(CmcParams params, std::vector<ProfileSample> samples, Tolerances tol)
    : params_(params), samples_(std::move(samples)), tol_(tol) {
    if (samples_.size() < 2) throw PreconditionError("ProfileCurve: need at least two samples");
    const double eta = params_.neck();
    if (std::abs(samples_.front().rho - eta) > 1e-12 || samples_.front().t != 0.0) {
        throw PreconditionError("ProfileCurve: first sample must be (neck, 0)");
    }
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        if (!(samples_[i].rho > samples_[i - 1].rho && samples_[i].t > samples_[i - 1].t)) {
            throw PreconditionError("ProfileCurve: samples must increase strictly in rho and t");
        }
    }
    const std::size_t n = samples_.size();
    u_.resize(n);
    for (std::size_t i = 0; i < n; ++i) u_[i] = std::sqrt(std::max(0.0, samples_[i].rho - eta));

    std::vector<double> secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        secant[i] = (samples_[i + 1].t - samples_[i].t) / (u_[i + 1] - u_[i]);
    }
    slopes_.assign(n, 0.0);
    slopes_.front() = secant.front();
    slopes_.back() = secant.back();
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double h0 = u_[k] - u_[k - 1];
        const double h1 = u_[k + 1] - u_[k];
        const double w1 = 2.0 * h1 + h0;
        const double w2 = h1 + 2.0 * h0;
        slopes_[k] = (w1 + w2) / (w1 / secant[k - 1] + w2 / secant[k]);
    }
}

double ProfileCurve::height_at(double rho) const {
    if (!(rho >= samples_.front().rho - 1e-12 && rho <= samples_.back().rho)) {
        throw DomainError("ProfileCurve::height_at: rho outside the sampled range");
    }
    const double u = std::sqrt(std::max(0.0, rho - params_.neck()));
    auto it = std::upper_bound(u_.begin(), u_.end(), u);
    std::size_t k = it == u_.begin() ? 0 : static_cast<std::size_t>(it - u_.begin()) - 1;
    if (k + 1 >= u_.size()) return samples_.back().t;
    const double h = u_[k + 1] - u_[k];
    const double s = (u - u_[k]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * samples_[k].t + (s3 - 2 * s2 + s) * h * slopes_[k] +
           (-2 * s3 + 3 * s2) * samples_[k + 1].t + (s3 - s2) * h * slopes_[k + 1];
}

}  // namespace hcat
