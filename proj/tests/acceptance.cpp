// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hcat/catenoid.hpp"
#include "hcat/disjointness.hpp"
#include "hcat/geometry.hpp"
#include "hcat/mesh.hpp"
#include "hcat/strips.hpp"
#include "support.hpp"

using namespace hcat;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<double> kHs{0.1, 0.25, 0.4};
const std::vector<double> kDs{2.5, 3.0, 10.0, 100.0};

std::vector<double> radius_grid(const CmcParams& p) {
    std::vector<double> rs;
    for (int k = 0; k < 50; ++k) rs.push_back(p.neck() + 1e-6 + (10.0 - 1e-6) * k / 49.0);
    return rs;
}

Outcome decomposition() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double H : kHs) {
        for (double d : kDs) {
            const CmcParams p(H, d);
            for (double r : radius_grid(p)) {
                const double lam = lambda(p, r);
                worst = std::max(worst, std::abs(lam - (f_closed(p, r) + j_remainder(p, r))) / std::max(1.0, lam));
            }
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-8 && secs < 10.0, fmt("max |lambda-(f+J)|/max(1,lambda) = %.3e (<= 1e-8), %.2f s (< 10 s)", worst, secs)};
}

Outcome closed_form_derivative() {
    double worst = 0.0;
    int points = 0;
    for (double H : kHs) {
        for (double d : kDs) {
            const CmcParams p(H, d);
            const auto rs = radius_grid(p);
            for (std::size_t k = 1; k + 1 < rs.size(); ++k) {
                const double r = rs[k];
                if (r - p.neck() < 0.05) continue;
                const double h = 1e-5;
                const double fd = (f_closed(p, r + h) - f_closed(p, r - h)) / (2.0 * h);
                const double c = d + 2.0 * H * std::cosh(r);
                const double exact = 2.0 * H * std::sinh(r) / std::sqrt(std::sinh(r) * std::sinh(r) - c * c);
                worst = std::max(worst, std::abs(fd - exact) / exact);
                ++points;
            }
        }
    }
    return {worst <= 1e-6 && points > 0, fmt("max relative error %.3e (<= 1e-6) over %d interior points", worst, points)};
}

Outcome remainder_bound() {
    bool ok = true;
    bool tighter = true;
    double min_margin = INFINITY;
    for (double H : kHs) {
        const double bound = 2.0 * std::numbers::pi * std::sqrt(1.0 - 2.0 * H);
        for (double d : kDs) {
            const CmcParams p(H, d);
            double sup = 0.0;
            for (double r : radius_grid(p)) sup = std::max(sup, j_remainder(p, r));
            ok = ok && sup < bound;
            tighter = tighter && sup < 0.5 * bound;
            min_margin = std::min(min_margin, bound - sup);
        }
    }
    return {ok && min_margin > 0.0,
            fmt("min margin to 2*pi*sqrt(1-2H) = %.6f; pi*sqrt(1-2H) held: %s (reported only)", min_margin,
                tighter ? "yes" : "no")};
}

Outcome certificate() {
    const auto t0 = std::chrono::steady_clock::now();
    const double H = 0.25, d1 = 3.0;
    const double d0 = solve_d0(H, d1);
    const double residual = std::abs(d0_equation_lhs(H, d1, d0) - 1.0);
    const double A = 1.0 - 4.0 * H * H;
    const double oracle = std::sqrt((d1 * d1 + A) * std::exp(2.0 * (4.0 * H / std::sqrt(A) +
                                                                      4.0 * std::numbers::pi * std::sqrt(1.0 - 2.0 * H))) - A);
    CertifyOptions opts;
    opts.d2_is_threshold = true;
    const DisjointnessCertificate c = certify(H, d1, d0, 50.0, opts);
    double min_gap = INFINITY;
    double max_inc = -INFINITY;
    for (std::size_t k = 0; k < c.scan.size(); ++k) {
        min_gap = std::min(min_gap, c.scan[k].gap);
        if (k > 0) max_inc = std::max(max_inc, c.scan[k].gap - c.scan[k - 1].gap);
    }
    const double sup_err = std::abs(c.scan.front().gap - (necksize(CmcParams(H, d0)) - necksize(CmcParams(H, d1))));
    const double secs = seconds_since(t0);
    const bool ok = residual <= 1e-10 && std::abs(d0 - oracle) <= 1e-9 * oracle && d0 > 7.1e4 && d0 < 7.3e4 &&
                    c.delta0 > 0.0 && min_gap >= c.delta0 && max_inc <= 1e-9 && sup_err <= 1e-9 && secs < 60.0;
    return {ok, fmt("d0 = %.6f (oracle %.6f), residual %.1e; delta0 = %.6f, min gap %.6f, max increment %.1e, "
                    "sup error %.1e, %.2f s",
                    d0, oracle, residual, c.delta0, min_gap, max_inc, sup_err, secs)};
}

Outcome necksize_exactness() {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double H = test::uniform(1e-3, 0.499);
        worst = std::max(worst, std::abs(necksize(CmcParams(H, -2.0 * H))));
    }
    bool increasing = true;
    for (double H : kHs) {
        double prev = -1.0;
        for (int k = 0; k < 20; ++k) {
            const double d = -2.0 * H + 0.25 * k * k;
            const double eta = necksize(CmcParams(H, d));
            increasing = increasing && eta > prev;
            prev = eta;
        }
    }
    return {worst <= 1e-14 && increasing,
            fmt("max |necksize(H,-2H)| = %.1e over 20 random H; strictly increasing on 20-point d grids: %s", worst,
                increasing ? "yes" : "no")};
}

Outcome strip_claims() {
    CertifyOptions opts;
    opts.d2_is_threshold = true;
    const DisjointnessCertificate c = certify(0.25, 3.0, solve_d0(0.25, 3.0), 50.0, opts);
    const StripOffsets o = compute_offsets(c);
    const auto ts = symmetric_grid(50.0, 0.1);
    const StripReport claim = verify_strip_claim(c, o, ts);
    const StripReport c3 = verify_c3_lemma(c, ts);
    const StripReport remark = remark_sweep(c, o, interior_log_grid(c.d1, c.d2, 20), ts);
    std::map<std::string, bool> ids;
    for (const auto* r : {&claim, &c3}) {
        for (const StripCheck& s : r->checks) ids.try_emplace(s.check, true).first->second &= s.passed;
    }
    bool all = ids.size() == 9;
    for (const auto& [id, ok] : ids) all = all && ok;
    int witnesses = 0;
    for (const StripCheck& s : remark.checks) witnesses += s.passed ? 1 : 0;
    const bool ok = all && claim.pass && c3.pass && claim.min_margin > 0.0 && c3.min_margin > 0.0 && remark.pass &&
                    witnesses == 20;
    return {ok, fmt("%zu check ids; strip min margin %.4f (%s), c3 min margin %.4f (%s); witnesses %d/20", ids.size(),
                    claim.min_margin, claim.min_margin_check.c_str(), c3.min_margin, c3.min_margin_check.c_str(),
                    witnesses)};
}

Outcome round_trip() {
    const std::vector<std::pair<double, double>> pairs{{0.25, 2.0}, {0.25, 3.0}, {0.1, 2.5}, {0.4, 10.0}, {0.25, 71617.88}};
    double worst = 0.0;
    int count = 0;
    for (auto [H, d] : pairs) {
        const CmcParams p(H, d);
        for (int k = 0; k <= 500; ++k) {
            const double t = 0.1 * k;
            worst = std::max(worst, std::abs(lambda(p, b_inverse(p, t)) - t));
            ++count;
        }
    }
    return {worst <= 1e-9, fmt("max |lambda(b(t)) - t| = %.3e (<= 1e-9) over %d heights in [0, 50]", worst, count)};
}

Outcome geometry_oracles() {
    int agree = 0, pairs = 0;
    while (pairs < 1000) {
        const HypCircle c1(test::random_point(3.0), test::uniform(0.05, 3.0));
        const HypCircle c2(test::random_point(3.0), test::uniform(0.05, 3.0));
        if (std::abs(two_point_margin(c1, c2)) < 1e-3) continue;
        ++pairs;
        const bool crossing = classify_circle_intersection(c1, c2) == IntersectionClass::TwoPoints;
        agree += (test::sampled_sign_changes(c1, c2) == 2) == crossing ? 1 : 0;
    }
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const HypPoint p = test::random_point(5.0), q = test::random_point(5.0);
        const double s = test::uniform(-4.0, 4.0);
        const double before = hyp_distance(p, q);
        worst = std::max(worst, std::abs(before - hyp_distance(translate_along_geodesic(p, s),
                                                                translate_along_geodesic(q, s))) /
                                    std::max(1.0, before));
    }
    return {agree == pairs && worst <= 1e-12,
            fmt("classification agrees on %d/%d pairs; translation distance error %.1e (<= 1e-12)", agree, pairs, worst)};
}

Outcome mesh_determinism() {
    RevolveOptions tiny;
    tiny.angular_steps = 3;
    const SurfaceMesh m = revolve(ProfileCurve(CmcParams(0.25, -0.5), {{0.0, 0.0}, {0.5, 0.0625}, {1.25, 0.40625}}), tiny);
    std::ifstream in(std::filesystem::path(HCAT_TEST_DATA) / "tiny_mesh.obj", std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    const bool golden_ok = !golden.str().empty() && to_obj(m) == golden.str() && to_obj(m) == to_obj(revolve(
        ProfileCurve(CmcParams(0.25, -0.5), {{0.0, 0.0}, {0.5, 0.0625}, {1.25, 0.40625}}), tiny));

    bool counts = true;
    bool symmetric = true;
    for (int n : {4, 9}) {
        for (std::size_t steps : {16u, 5u}) {
            RevolveOptions o;
            o.angular_steps = steps;
            const SurfaceMesh s = revolve(profile(CmcParams(0.25, 2.0), 5.0, n), o);
            const std::size_t rows = 2 * static_cast<std::size_t>(n) - 1;
            counts = counts && s.vertices.size() == rows * steps && s.quads.size() == (rows - 1) * steps;
            std::map<std::tuple<double, double, double>, int> seen;
            for (const Vec3& v : s.vertices) ++seen[{v.x, v.y, v.z}];
            for (const Vec3& v : s.vertices) symmetric = symmetric && seen.count({v.x, v.y, -v.z}) == 1;
        }
    }
    RevolveOptions o;
    o.angular_steps = 16;
    counts = counts && revolve(profile(CmcParams(0.25, 2.0), 5.0, 4), o).vertices.size() == 112;
    return {golden_ok && counts && symmetric, fmt("golden bytes %s; counts %s; z-symmetry %s", golden_ok ? "match" : "differ",
                                                  counts ? "match" : "differ", symmetric ? "holds" : "fails")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"decomposition identity", decomposition},
        {"closed-form derivative", closed_form_derivative},
        {"remainder bound", remainder_bound},
        {"disjointness certificate", certificate},
        {"necksize exactness", necksize_exactness},
        {"strip claims", strip_claims},
        {"inversion round trip", round_trip},
        {"geometry oracles", geometry_oracles},
        {"mesh determinism", mesh_determinism},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome r;
        try {
            r = criteria[k].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failures += r.pass ? 0 : 1;
        std::printf("%s %zu %s: %s\n", r.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, r.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
