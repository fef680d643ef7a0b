#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcat/catenoid.hpp"
#include "hcat/disjointness.hpp"

namespace hcat {

/// Horizontal shifts of C1 (by +delta1) and C2 (by -delta2) built from the
/// infimum radial gap delta.
struct StripOffsets {
    double delta;
    double delta1;  // min(delta, neck1) / 2
    double delta2;  // delta - delta1 / 2
};

/// One strict inequality evaluated at one height (and, for sweeps, one d).
struct StripCheck {
    double t;
    std::string check;
    double margin;  // positive iff the inequality holds
    bool passed;
    std::optional<double> d;
    std::string detail;  // classification name when the check is a circle classification
};

struct StripReport {
    std::string claim;
    std::vector<double> t_grid;
    std::vector<StripCheck> checks;
    bool pass = true;
    double min_margin = 0.0;
    double min_margin_t = 0.0;
    std::string min_margin_check;
    std::vector<std::string> notes;
};

/// Offsets from the certificate's own scan data; rejects a non-positive gap.
StripOffsets compute_offsets(const DisjointnessCertificate& cert);

StripOffsets offsets_from_delta(double delta, double neck1);

/// Symmetric grid -t_max, ..., t_max with the given step.
std::vector<double> symmetric_grid(double t_max, double step);

/// n points geometrically spaced strictly inside (d1, d2).
std::vector<double> interior_log_grid(double d1, double d2, int n);

/// Shifted copies of C1 and C2 each meet the region between the catenoids in one
/// arc per height: six checks per t.
StripReport verify_strip_claim(const DisjointnessCertificate& cert, const StripOffsets& offsets,
                               const std::vector<double>& t_grid);

/// C2 shifted by its own neck crosses both C1 and C2 in two points per height.
StripReport verify_c3_lemma(const DisjointnessCertificate& cert, const std::vector<double>& t_grid);

/// Every intermediate catenoid C_d meets one of the shifted circles at some grid height.
/// A d without a witness triggers one 10x refinement of the t grid before it is
/// reported as failed.
StripReport remark_sweep(const DisjointnessCertificate& cert, const StripOffsets& offsets,
                         const std::vector<double>& d_grid, const std::vector<double>& t_grid);

}  // namespace hcat
