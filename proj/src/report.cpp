#include "hcat/report.hpp"

#include <cmath>
#include <cstdio>

#include "hcat/errors.hpp"

namespace hcat {

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json samples_json(const std::vector<GapSample>& samples) {
    Json arr = Json::array();
    for (const GapSample& s : samples) arr.push_back({s.t, s.gap});
    return arr;
}

std::vector<GapSample> samples_from(const Json& arr) {
    std::vector<GapSample> out;
    for (const Json& row : arr) out.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
    return out;
}

}  // namespace

Json to_json(const Tolerances& tol) {
    return {{"quad_abs", tol.quad_abs}, {"root", tol.root}, {"rho_max", tol.rho_max}};
}

Tolerances tolerances_from_json(const Json& j) {
    Tolerances tol;
    tol.quad_abs = j.value("quad_abs", tol.quad_abs);
    tol.root = j.value("root", tol.root);
    tol.rho_max = j.value("rho_max", tol.rho_max);
    return tol;
}

Json to_json(const ProfileCurve& profile) {
    Json samples = Json::array();
    for (const ProfileSample& s : profile.samples()) samples.push_back({s.rho, s.t});
    return {
        {"params", {{"H", profile.params().H()}, {"d", profile.params().d()}}},
        {"necksize", profile.params().neck()},
        {"entire_graph", profile.params().is_entire_graph()},
        {"columns", {"rho", "t"}},
        {"samples", samples},
        {"tolerances", to_json(profile.tolerances())},
    };
}

Json to_json(const DisjointnessCertificate& c) {
    Json j = {
        {"kind", "disjointness_certificate"},
        {"tool_version", kToolVersion},
        {"H", c.H},
        {"d1", c.d1},
        {"d2", c.d2},
        {"beyond_lemma", c.beyond_lemma},
        {"delta0", c.delta0},
        {"sup_gap", c.sup_gap},
        {"neck_gap", c.neck_gap},
        {"t_max", c.t_max},
        {"grid_step", c.grid_step},
        {"min_gap_observed", c.min_gap_observed},
        {"min_gap_t", c.min_gap_t},
        {"asymptotic_bound", c.asymptotic_bound},
        {"asymptotic_consistent", c.asymptotic_consistent},
        {"monotone_decreasing", c.monotone_decreasing},
        {"max_increment", number(c.max_increment)},
        {"monotone_tolerance", c.monotone_tolerance},
        {"tolerances", to_json(c.tolerances)},
        {"scan", samples_json(c.scan)},
        {"refined", samples_json(c.refined)},
    };
    j["d0"] = c.d0 ? Json(*c.d0) : Json(nullptr);
    return j;
}

DisjointnessCertificate certificate_from_json(const Json& j) {
    try {
        DisjointnessCertificate c;
        c.H = j.at("H").get<double>();
        c.d1 = j.at("d1").get<double>();
        c.d2 = j.at("d2").get<double>();
        if (j.contains("d0") && !j["d0"].is_null()) c.d0 = j["d0"].get<double>();
        c.beyond_lemma = j.value("beyond_lemma", false);
        c.delta0 = j.at("delta0").get<double>();
        c.sup_gap = j.value("sup_gap", 0.0);
        c.neck_gap = j.value("neck_gap", 0.0);
        c.t_max = j.at("t_max").get<double>();
        c.grid_step = j.at("grid_step").get<double>();
        c.min_gap_observed = j.at("min_gap_observed").get<double>();
        c.min_gap_t = j.value("min_gap_t", 0.0);
        c.asymptotic_bound = j.value("asymptotic_bound", 0.0);
        c.asymptotic_consistent = j.value("asymptotic_consistent", true);
        c.monotone_decreasing = j.value("monotone_decreasing", false);
        if (j.contains("max_increment") && j["max_increment"].is_number()) {
            c.max_increment = j["max_increment"].get<double>();
        }
        c.monotone_tolerance = j.value("monotone_tolerance", 1e-9);
        if (j.contains("tolerances")) c.tolerances = tolerances_from_json(j["tolerances"]);
        c.scan = samples_from(j.at("scan"));
        if (j.contains("refined")) c.refined = samples_from(j["refined"]);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed certificate: ") + e.what());
    }
}

Json to_json(const StripOffsets& o) {
    return {{"delta", o.delta}, {"delta1", o.delta1}, {"delta2", o.delta2}};
}

Json to_json(const StripReport& r) {
    Json checks = Json::array();
    for (const StripCheck& c : r.checks) {
        Json row = {{"t", number(c.t)}, {"check", c.check}, {"margin", number(c.margin)}, {"passed", c.passed}};
        if (c.d) row["d"] = *c.d;
        if (!c.detail.empty()) row["detail"] = c.detail;
        checks.push_back(std::move(row));
    }
    return {
        {"claim", r.claim},
        {"pass", r.pass},
        {"min_margin", number(r.min_margin)},
        {"min_margin_t", number(r.min_margin_t)},
        {"min_margin_check", r.min_margin_check},
        {"t_grid", {{"count", r.t_grid.size()},
                    {"min", r.t_grid.empty() ? Json(nullptr) : Json(r.t_grid.front())},
                    {"max", r.t_grid.empty() ? Json(nullptr) : Json(r.t_grid.back())}}},
        {"notes", r.notes},
        {"checks", checks},
    };
}

Json to_json(const MeshInfo& info) {
    return {
        {"params", {{"H", info.H}, {"d", info.d}}},
        {"embedding", std::string(to_string(info.embedding))},
        {"profile_samples", info.profile_samples},
        {"rows", info.rows},
        {"angular_steps", info.angular_steps},
        {"vertex_count", info.rows * info.angular_steps},
        {"doubled", info.doubled},
        {"triangulated", info.triangulated},
        {"tool_version", kToolVersion},
    };
}

Json to_json(const AppendixCase& c) {
    Json j = {
        {"H", c.H},
        {"d", c.d},
        {"necksize", c.neck},
        {"decomposition_error", c.decomposition_error},
        {"derivative_error", c.derivative_error},
        {"derivative_points", c.derivative_points},
        {"j_sup", c.j_sup},
        {"j_bound", c.j_bound},
        {"j_margin", c.j_margin},
        {"tighter_bound_held", c.tighter_bound_held},
        {"g_decay_monotone", c.g_decay_monotone},
        {"g_at_neck_plus_20", c.g_at_far},
        {"passed", c.passed},
    };
    if (c.witness_checked) {
        j["witness"] = {{"alpha", c.alpha}, {"beta", c.beta}, {"omega", c.omega},
                        {"omega_inequality", c.omega_inequality}};
    }
    return j;
}

std::string margins_csv(const StripReport& report) {
    std::string out = "t,check,margin\n";
    char buf[96];
    for (const StripCheck& c : report.checks) {
        std::string id = c.check;
        if (c.d) {
            std::snprintf(buf, sizeof buf, "[d=%.17g]", *c.d);
            id += buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g,", c.t);
        out += buf;
        out += id;
        std::snprintf(buf, sizeof buf, ",%.17g\n", c.margin);
        out += buf;
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hcat
