#pragma once

#include <optional>
#include <vector>

#include "hcat/catenoid.hpp"

namespace hcat {

struct GapSample {
    double t;
    double gap;
};

/// Numeric record that inf over t of b_{d2}(t) - b_{d1}(t) is at least delta0 > 0,
/// so the catenoids C_{d1} and C_{d2} are disjoint.
///
/// The scan covers [0, t_max]; evenness of b_d extends it to negative t, and the
/// proven decrease of the gap for t > 0 lets the minimum at t_max stand in for
/// all larger t. When the asymptotic separation bound is positive it is folded
/// into delta0 as well.
struct DisjointnessCertificate {
    double H = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    std::optional<double> d0;       // set when d2 was derived as the threshold for d1
    bool beyond_lemma = false;      // d2 below the threshold; scan-only certificate
    double delta0 = 0.0;
    double sup_gap = 0.0;           // gap at t = 0
    double neck_gap = 0.0;          // neck(d2) - neck(d1)
    double t_max = 0.0;
    double grid_step = 0.0;
    double min_gap_observed = 0.0;
    double min_gap_t = 0.0;
    double asymptotic_bound = 0.0;
    bool asymptotic_consistent = true;  // gap(t_max) >= asymptotic_bound - 1e-6 when the bound is positive
    bool monotone_decreasing = false;
    double max_increment = 0.0;     // largest forward difference of the gap over the scan
    double monotone_tolerance = 1e-9;
    std::vector<GapSample> scan;
    std::vector<GapSample> refined;  // 10x finer samples around the scan minimum
    Tolerances tolerances;
};

/// Left side of the threshold equation; the threshold d0 is where it equals 1.
double d0_equation_lhs(double H, double d1, double d0_candidate);

double solve_d0(double H, double d1);

/// b_{d2}(t) - b_{d1}(t).
double gap(double H, double d1, double d2, double t, const Tolerances& tol = {});

/// Lower bound for b_{d2}(t) - b_{d1}(t) that holds for all sufficiently large t.
/// Negative when d2 is too close to d1 to certify anything.
double separation_lower_bound(double H, double d1, double d2);

/// Height past which |g_residual| < eps/4 for both parameters, with
/// eps = ln sqrt((d2^2 + 1 - 4H^2)/(d1^2 + 1 - 4H^2)) / 4.
double asymptotic_height(double H, double d1, double d2, const Tolerances& tol = {});

/// Scan horizon used when none is given: the asymptotic height, but at least 50.
double default_t_max(double H, double d1, double d2, const Tolerances& tol = {});

struct CertifyOptions {
    double grid_step = 0.05;
    double monotone_tolerance = 1e-9;
    int refinement = 10;
    bool d2_is_threshold = false;
    Tolerances tolerances{};
};

/// Throws CertificationFailure at the first t where the gap is not positive or
/// grows by more than the monotone tolerance.
DisjointnessCertificate certify(double H, double d1, double d2, double t_max,
                                const CertifyOptions& options = {});

}  // namespace hcat
