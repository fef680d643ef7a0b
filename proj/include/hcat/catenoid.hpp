#pragma once

#include <vector>

namespace hcat {

/// Numerical tolerances shared by the quadrature and inversion routines.
struct Tolerances {
    double quad_abs = 1e-10;  // absolute error target for each integral
    double root = 1e-10;      // target accuracy of b_inverse in rho
    double rho_max = 1e4;     // bracket expansion ceiling for b_inverse
};

/// Parameters (H, d) of one rotational H-catenoid, or of the entire graph when d = -2H.
///
/// Requires 0 < H < 1/2 and d >= -2H. The roots alpha > beta of
/// c^2 - 1 - (d + 2Hc)^2 (alpha = cosh of the neck) are cached since every
/// integrand is written in the factored form (1 - 4H^2)(c - alpha)(c - beta).
class CmcParams {
public:
    CmcParams(double H, double d);

    double H() const noexcept { return H_; }
    double d() const noexcept { return d_; }
    bool is_entire_graph() const noexcept { return excess_ == 0.0; }

    double one_minus_4h2() const noexcept { return a_; }       // 1 - 4H^2
    double root_disc() const noexcept { return s_; }           // sqrt(d^2 + 1 - 4H^2)
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double neck() const noexcept { return eta_; }
    double excess() const noexcept { return excess_; }         // d + 2H >= 0
    double slope() const noexcept;                             // 2H / sqrt(1 - 4H^2)

private:
    double H_, d_, a_, s_, excess_, alpha_, beta_, eta_;
};

struct ProfileSample {
    double rho;
    double t;
};

/// Sampled generating curve t = lambda_d(rho), rho >= neck.
///
/// Between samples the curve is a monotone (Fritsch-Butland) cubic in the
/// variable u = sqrt(rho - neck), in which lambda is smooth at the neck.
class ProfileCurve {
public:
    ProfileCurve(CmcParams params, std::vector<ProfileSample> samples, Tolerances tol = {});

    const CmcParams& params() const noexcept { return params_; }
    const std::vector<ProfileSample>& samples() const noexcept { return samples_; }
    const Tolerances& tolerances() const noexcept { return tol_; }
    std::size_t size() const noexcept { return samples_.size(); }

    /// Interpolated height; throws DomainError outside [first rho, last rho].
    double height_at(double rho) const;

private:
    CmcParams params_;
    std::vector<ProfileSample> samples_;
    std::vector<double> u_;
    std::vector<double> slopes_;
    Tolerances tol_;
};

struct JBoundWitness {
    double alpha;
    double beta;
    double omega;
    double bound;  // 2 pi sqrt(1 - 2H)
};

double necksize(const CmcParams& p);

/// (d + 2H cosh r) / sqrt(sinh^2 r - (d + 2H cosh r)^2), the slope of the generating curve.
double integrand(const CmcParams& p, double r);

/// 2H sinh r / sqrt(sinh^2 r - (d + 2H cosh r)^2), the derivative of f_closed.
double f_integrand(const CmcParams& p, double r);

/// (d + 2H e^{-r}) / sqrt(sinh^2 r - (d + 2H cosh r)^2), the derivative of j_remainder.
double j_integrand(const CmcParams& p, double r);

double lambda(const CmcParams& p, double rho, const Tolerances& tol = {});

/// Closed form of the 2H sinh r part of the generating integral.
double f_closed(const CmcParams& p, double rho);

/// f_closed minus its linear asymptote slope * (rho + ln((1 - 4H^2) / sqrt(d^2 + 1 - 4H^2))).
double g_residual(const CmcParams& p, double rho);

double j_remainder(const CmcParams& p, double rho, const Tolerances& tol = {});

JBoundWitness j_bound_witness(const CmcParams& p);

/// Even inverse of lambda: the radius of the catenoid at height t.
double b_inverse(const CmcParams& p, double t, const Tolerances& tol = {});

ProfileCurve profile(const CmcParams& p, double rho_max, int n, const Tolerances& tol = {});

ProfileCurve entire_graph_profile(double H, double rho_max, int n, const Tolerances& tol = {});

}  // namespace hcat
