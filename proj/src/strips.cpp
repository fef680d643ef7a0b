#include "hcat/strips.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hcat/errors.hpp"
#include "hcat/geometry.hpp"
#include "hcat/parallel.hpp"

namespace hcat {

namespace {

void validate(const DisjointnessCertificate& cert) {
    if (!(cert.d1 > -2.0 * cert.H && cert.d2 > cert.d1)) {
        throw PreconditionError("certificate: requires d1 < d2");
    }
    CmcParams(cert.H, cert.d1);  // validates H
}

// b(|t|) for each grid height, evaluating each distinct |t| once.
std::vector<double> radii_on(const CmcParams& p, const std::vector<double>& ts, const Tolerances& tol) {
    std::vector<double> keys;
    keys.reserve(ts.size());
    for (double t : ts) keys.push_back(std::abs(t));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<double> values(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) { values[i] = b_inverse(p, keys[i], tol); });
    std::vector<double> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto it = std::lower_bound(keys.begin(), keys.end(), std::abs(ts[i]));
        out[i] = values[static_cast<std::size_t>(it - keys.begin())];
    }
    return out;
}

StripCheck inequality(double t, const char* id, double margin) {
    return {t, id, margin, margin > 0.0, std::nullopt, {}};
}

StripCheck crossing(double t, const char* id, const HypCircle& a, const HypCircle& b) {
    const IntersectionClass cls = classify_circle_intersection(a, b);
    const double margin = two_point_margin(a, b);
    return {t, id, margin, cls == IntersectionClass::TwoPoints && margin > 0.0, std::nullopt,
            std::string(to_string(cls))};
}

void summarize(StripReport& report) {
    report.pass = !report.checks.empty();
    report.min_margin = std::numeric_limits<double>::infinity();
    for (const StripCheck& c : report.checks) {
        report.pass = report.pass && c.passed;
        if (c.margin < report.min_margin) {
            report.min_margin = c.margin;
            report.min_margin_t = c.t;
            report.min_margin_check = c.check;
        }
    }
}

}  // namespace

StripOffsets offsets_from_delta(double delta, double neck1) {
    if (!(delta > 0.0)) throw PreconditionError("offsets: the infimum gap must be positive");
    StripOffsets o{};
    o.delta = delta;
    o.delta1 = 0.5 * std::min(delta, neck1);
    o.delta2 = delta - 0.5 * o.delta1;
    return o;
}

StripOffsets compute_offsets(const DisjointnessCertificate& cert) {
    validate(cert);
    if (cert.scan.empty()) throw PreconditionError("offsets: certificate carries no scan data");
    double delta = std::numeric_limits<double>::infinity();
    for (const auto* samples : {&cert.scan, &cert.refined}) {
        for (const GapSample& s : *samples) delta = std::min(delta, s.gap);
    }
    return offsets_from_delta(delta, necksize(CmcParams(cert.H, cert.d1)));
}

std::vector<double> symmetric_grid(double t_max, double step) {
    if (!(t_max >= 0.0 && step > 0.0)) throw PreconditionError("grid: requires t_max >= 0, step > 0");
    const auto n = static_cast<long>(std::llround(t_max / step));
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(2 * n + 1));
    for (long k = -n; k <= n; ++k) ts.push_back(static_cast<double>(k) * step);
    return ts;
}

std::vector<double> interior_log_grid(double d1, double d2, int n) {
    if (!(d1 > 0.0 && d2 > d1 && n >= 1)) throw PreconditionError("grid: requires 0 < d1 < d2, n >= 1");
    std::vector<double> ds;
    const double ratio = std::log(d2 / d1);
    for (int k = 1; k <= n; ++k) ds.push_back(d1 * std::exp(ratio * k / (n + 1)));
    return ds;
}

StripReport verify_strip_claim(const DisjointnessCertificate& cert, const StripOffsets& offsets,
                               const std::vector<double>& t_grid) {
    validate(cert);
    const CmcParams p1(cert.H, cert.d1), p2(cert.H, cert.d2);
    const auto b1 = radii_on(p1, t_grid, cert.tolerances);
    const auto b2 = radii_on(p2, t_grid, cert.tolerances);
    const HypPoint origin = HypPoint::origin();
    const HypPoint p1_center = translate_along_geodesic(origin, offsets.delta1);
    const HypPoint p2_center = translate_along_geodesic(origin, -offsets.delta2);

    StripReport report;
    report.claim = "shifted_catenoid_strips";
    report.t_grid = t_grid;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        const HypCircle tau1(origin, b1[i]), tau2(origin, b2[i]);
        report.checks.push_back(inequality(t, "i_center1_inside", b1[i] - offsets.delta1));
        report.checks.push_back(crossing(t, "ii_tau1_meets_shifted", tau1, HypCircle(p1_center, b1[i])));
        report.checks.push_back(inequality(t, "iii_shifted1_misses_tau2", b2[i] - b1[i] - offsets.delta1));
        report.checks.push_back(inequality(t, "iv_center2_inside", b2[i] - offsets.delta2));
        report.checks.push_back(crossing(t, "v_tau2_meets_shifted", tau2, HypCircle(p2_center, b2[i])));
        report.checks.push_back(inequality(t, "vi_shifted2_misses_tau1", b2[i] - offsets.delta2 - b1[i]));
    }
    summarize(report);
    return report;
}

StripReport verify_c3_lemma(const DisjointnessCertificate& cert, const std::vector<double>& t_grid) {
    validate(cert);
    const CmcParams p1(cert.H, cert.d1), p2(cert.H, cert.d2);
    const auto b1 = radii_on(p1, t_grid, cert.tolerances);
    const auto b2 = radii_on(p2, t_grid, cert.tolerances);
    const double eta2 = p2.neck();
    const HypPoint origin = HypPoint::origin();
    const HypPoint center = translate_along_geodesic(origin, eta2);

    StripReport report;
    report.claim = "neck_shifted_catenoid_strips";
    report.t_grid = t_grid;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        report.checks.push_back(crossing(t, "a_tau2_meets_tau3", HypCircle(origin, b2[i]), HypCircle(center, b2[i])));
        report.checks.push_back(inequality(t, "b_inner_point_inside_tau1", b1[i] - (eta2 - b2[i])));
        report.checks.push_back(inequality(t, "c_gap_below_neck2", eta2 - (b2[i] - b1[i])));
    }
    summarize(report);
    return report;
}

StripReport remark_sweep(const DisjointnessCertificate& cert, const StripOffsets& offsets,
                         const std::vector<double>& d_grid, const std::vector<double>& t_grid) {
    validate(cert);
    for (double d : d_grid) {
        if (!(d > cert.d1 && d < cert.d2)) throw PreconditionError("remark_sweep: d outside (d1, d2)");
    }
    if (t_grid.empty()) throw PreconditionError("remark_sweep: empty t grid");
    const CmcParams p1(cert.H, cert.d1), p2(cert.H, cert.d2);
    const HypPoint origin = HypPoint::origin();
    const HypPoint c1 = translate_along_geodesic(origin, offsets.delta1);
    const HypPoint c2 = translate_along_geodesic(origin, -offsets.delta2);

    // Best two-point margin of C_d against either shifted circle at each height,
    // tried from the top of the grid down.
    auto search = [&](const CmcParams& pd, std::vector<double> ts) -> std::optional<StripCheck> {
        std::sort(ts.begin(), ts.end(), std::greater<>());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        std::map<double, std::pair<double, double>> memo;  // |t| -> (b1, b2)
        for (double t : ts) {
            auto [it, fresh] = memo.try_emplace(std::abs(t));
            if (fresh) it->second = {b_inverse(p1, t, cert.tolerances), b_inverse(p2, t, cert.tolerances)};
            const auto [r1, r2] = it->second;
            const HypCircle cd(origin, b_inverse(pd, t, cert.tolerances));
            const HypCircle s1(c1, r1), s2(c2, r2);
            const bool hit1 = classify_circle_intersection(cd, s1) == IntersectionClass::TwoPoints;
            const bool hit2 = classify_circle_intersection(cd, s2) == IntersectionClass::TwoPoints;
            if (hit1 || hit2) {
                const double m1 = hit1 ? two_point_margin(cd, s1) : -1.0;
                const double m2 = hit2 ? two_point_margin(cd, s2) : -1.0;
                StripCheck c{t, "remark_witness", std::max(m1, m2), true, pd.d(),
                             m1 >= m2 ? "shifted_tau1" : "shifted_tau2"};
                return c;
            }
        }
        return std::nullopt;
    };

    StripReport report;
    report.claim = "intermediate_catenoids_meet_shifts";
    report.t_grid = t_grid;
    std::vector<StripCheck> results(d_grid.size());
    std::vector<std::string> notes(d_grid.size());
    parallel_for(d_grid.size(), [&](std::size_t k) {
        const CmcParams pd(cert.H, d_grid[k]);
        if (auto hit = search(pd, t_grid)) {
            results[k] = *hit;
            return;
        }
        const auto [lo, hi] = std::minmax_element(t_grid.begin(), t_grid.end());
        std::vector<double> fine;
        if (t_grid.size() > 1) {
            const double step = (*hi - *lo) / static_cast<double>(t_grid.size() - 1) / 10.0;
            for (std::size_t j = 0; j <= 10 * (t_grid.size() - 1); ++j) fine.push_back(*lo + step * j);
        }
        if (auto hit = search(pd, fine)) {
            results[k] = *hit;
            notes[k] = "d=" + std::to_string(d_grid[k]) + ": witness found after refinement";
            return;
        }
        results[k] = {std::numeric_limits<double>::quiet_NaN(), "remark_witness", -1.0, false, d_grid[k],
                      "no witness on refined grid"};
        notes[k] = "d=" + std::to_string(d_grid[k]) + ": no witness; grid may be too coarse";
    });
    report.checks = std::move(results);
    for (auto& n : notes) {
        if (!n.empty()) report.notes.push_back(std::move(n));
    }
    summarize(report);
    return report;
}

}  // namespace hcat
