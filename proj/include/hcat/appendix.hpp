#pragma once

#include <vector>

#include "hcat/catenoid.hpp"

namespace hcat {

struct AppendixOptions {
    int points = 50;              // radii per (H, d), linearly spaced
    double first_offset = 1e-6;   // first radius is neck + first_offset
    double span = 10.0;           // last radius is neck + span
    double derivative_offset = 0.05;
    double derivative_step = 1e-5;
    double far_offset = 60.0;     // extra radius probing the supremum of J
    double decomposition_tol = 1e-8;
    double derivative_tol = 1e-6;
    Tolerances tolerances{};
};

/// Sweep results for one (H, d).
struct AppendixCase {
    double H = 0.0;
    double d = 0.0;
    double neck = 0.0;
    double decomposition_error = 0.0;  // max |lambda - f - J| / max(1, lambda)
    double derivative_error = 0.0;     // max relative error of the f_closed difference quotient
    int derivative_points = 0;
    double j_sup = 0.0;                // max of J over the grid and the far radius
    double j_bound = 0.0;              // 2 pi sqrt(1 - 2H)
    double j_margin = 0.0;
    bool tighter_bound_held = false;   // j_sup < pi sqrt(1 - 2H); reported only
    bool g_decay_monotone = false;     // |g| strictly decreasing on grid radii >= neck + 1
    double g_at_far = 0.0;             // g at neck + 20
    bool witness_checked = false;      // d > 2
    double alpha = 0.0, beta = 0.0, omega = 0.0;
    bool omega_inequality = false;     // 2 omega > d / (1 - 2H)
    bool passed = false;
};

/// Radii used by the sweeps for one parameter pair.
std::vector<double> appendix_grid(const CmcParams& p, const AppendixOptions& options);

AppendixCase verify_appendix_case(double H, double d, const AppendixOptions& options = {});

std::vector<AppendixCase> verify_appendix(const std::vector<double>& Hs, const std::vector<double>& ds,
                                          const AppendixOptions& options = {});

}  // namespace hcat
