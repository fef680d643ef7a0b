#include "hcat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hcat/appendix.hpp"
#include "hcat/catenoid.hpp"
#include "hcat/disjointness.hpp"
#include "hcat/errors.hpp"
#include "hcat/mesh.hpp"
#include "hcat/report.hpp"
#include "hcat/strips.hpp"

namespace hcat::cli {

namespace {

namespace fs = std::filesystem;

// Signals a failed mathematical check after the report has been written.
struct CheckFailed {};

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Flags from a JSON object, appended for every key not already on the command
// line. Booleans become bare flags; arrays become comma lists.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end()) return args;
    if (it + 1 == args.end()) throw CLI::ArgumentMismatch("--config: expected a path");
    const std::string path = *(it + 1);
    args.erase(it, it + 2);

    std::ifstream file(path);
    if (!file) throw CLI::FileError::Missing(path);
    Json config;
    try {
        config = Json::parse(file);
    } catch (const Json::exception& e) {
        throw CLI::ConversionError("--config: " + std::string(e.what()));
    }
    if (!config.is_object()) throw CLI::ConversionError("--config: expected a JSON object");

    auto scalar = [](const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number()) return format_number(v.get<double>());
        throw CLI::ConversionError("--config: unsupported value " + v.dump());
    };
    for (const auto& [key, value] : config.items()) {
        const std::string flag = "--" + key;
        if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else if (value.is_array()) {
            std::string joined;
            for (const Json& v : value) joined += (joined.empty() ? "" : ",") + scalar(v);
            args.push_back(flag);
            args.push_back(joined);
        } else {
            args.push_back(flag);
            args.push_back(scalar(value));
        }
    }
    return args;
}

Json echo_value(const std::string& text) {
    {
        std::istringstream in(text);
        long long i;
        if (in >> i && in.peek() == EOF) return i;
    }
    std::istringstream in(text);
    double v;
    if (in >> v && in.peek() == EOF) return v;
    return text;
}

// The effective configuration of a subcommand: every named option with its
// given or default value.
Json config_echo(const CLI::App& sub) {
    Json cfg = Json::object();
    for (const CLI::Option* opt : sub.get_options()) {
        const std::string name = opt->get_single_name();
        if (name.empty() || name == "help") continue;
        if (opt->get_expected_max() == 0) {
            cfg[name] = opt->count() > 0;
            continue;
        }
        std::vector<std::string> values = opt->results();
        if (values.empty()) {
            if (opt->get_default_str().empty()) {
                cfg[name] = nullptr;
                continue;
            }
            values.push_back(opt->get_default_str());
        }
        if (opt->get_items_expected_max() > 1) {
            Json arr = Json::array();
            for (const auto& v : values) arr.push_back(echo_value(v));
            cfg[name] = arr;
        } else {
            cfg[name] = echo_value(values.front());
        }
    }
    return cfg;
}

struct ToleranceFlags {
    Tolerances tol;
    void attach(CLI::App* sub) {
        sub->add_option("--quad-tol", tol.quad_abs, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--root-tol", tol.root, "Inversion tolerance in rho")->check(CLI::PositiveNumber);
        sub->add_option("--rho-limit", tol.rho_max, "Bracket ceiling for inversion")->check(CLI::PositiveNumber);
    }
};

Json envelope(const std::string& kind, const CLI::App& sub, const Tolerances& tol) {
    return {{"kind", kind}, {"tool_version", kToolVersion}, {"config", config_echo(sub)},
            {"tolerances", to_json(tol)}};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text(path, text);
    }
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rotational constant-mean-curvature catenoids in H^2 x R", "hcat"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.set_version_flag("--version", kToolVersion);

    ToleranceFlags tol_flags;
    int status = kExitOk;

    // necksize
    double nk_H = 0.0, nk_d = 0.0;
    auto* nk = app.add_subcommand("necksize", "Print the neck radius for (H, d)");
    nk->add_option("--H", nk_H, "Mean curvature in (0, 1/2)")->required();
    nk->add_option("--d", nk_d, "Family parameter, d >= -2H")->required();

    // curve / entire-graph
    struct CurveArgs {
        double H = 0.0, d = 0.0, rho_max = 5.0;
        int n = 64;
        std::string out, json;
    } cv, eg;
    eg.rho_max = 4.0;
    auto* curve = app.add_subcommand("curve", "Sample the generating curve (CSV rho,t)");
    curve->add_option("--H", cv.H)->required();
    curve->add_option("--d", cv.d)->required();
    curve->add_option("--rho-max", cv.rho_max, "Largest sampled radius");
    curve->add_option("--n", cv.n, "Number of samples")->check(CLI::Range(2, 1000000));
    curve->add_option("--out", cv.out, "CSV path (default stdout)");
    curve->add_option("--json", cv.json, "Also write the profile as JSON");
    tol_flags.attach(curve);

    auto* entire = app.add_subcommand("entire-graph", "Sample the entire graph d = -2H (CSV rho,t)");
    entire->add_option("--H", eg.H)->required();
    entire->add_option("--rho-max", eg.rho_max, "Largest sampled radius");
    entire->add_option("--n", eg.n, "Number of samples")->check(CLI::Range(2, 1000000));
    entire->add_option("--out", eg.out, "CSV path (default stdout)");
    entire->add_option("--json", eg.json, "Also write the profile as JSON");
    tol_flags.attach(entire);

    // verify-appendix
    std::vector<double> va_H{0.1, 0.25, 0.4}, va_d{2.1, 2.5, 3.0, 10.0, 100.0};
    AppendixOptions va_opts;
    std::string va_out;
    auto* appendix = app.add_subcommand("verify-appendix", "Decomposition, derivative, J-bound and g-decay sweeps");
    appendix->add_option("--H", va_H, "Mean curvatures")->delimiter(',');
    appendix->add_option("--d", va_d, "Family parameters")->delimiter(',');
    appendix->add_option("--points", va_opts.points, "Radii per case")->check(CLI::Range(3, 100000));
    appendix->add_option("--span", va_opts.span, "Grid extends to neck + span")->check(CLI::PositiveNumber);
    appendix->add_option("--out", va_out, "JSON path (default stdout)");
    tol_flags.attach(appendix);

    // disjoint
    double dj_H = 0.0, dj_d1 = 0.0, dj_step = 0.05, dj_mono = 1e-9;
    std::optional<double> dj_d2, dj_tmax;
    bool dj_solve = false;
    std::string dj_out;
    auto* disjoint = app.add_subcommand("disjoint", "Solve the d0 threshold and certify disjointness");
    disjoint->add_option("--H", dj_H)->required();
    disjoint->add_option("--d1", dj_d1)->required();
    auto* d2_opt = disjoint->add_option("--d2", dj_d2, "Second parameter");
    disjoint->add_flag("--solve-d0", dj_solve, "Use the solved threshold d0 as d2")->excludes(d2_opt);
    disjoint->add_option("--t-max", dj_tmax, "Scan horizon (default: max(50, asymptotic height))");
    disjoint->add_option("--step", dj_step, "Scan step")->check(CLI::PositiveNumber);
    disjoint->add_option("--monotone-tol", dj_mono, "Allowed increase of the gap between scan points")
        ->check(CLI::NonNegativeNumber);
    disjoint->add_option("--out", dj_out, "Certificate JSON path (default stdout)");
    tol_flags.attach(disjoint);

    // strips
    std::string st_cert, st_out, st_csv;
    double st_tmax = 50.0, st_step = 0.1;
    int st_dpoints = 20;
    auto* strips = app.add_subcommand("strips", "Check the strip claims for a certified pair");
    strips->add_option("--cert", st_cert, "Certificate JSON")->required()->check(CLI::ExistingFile);
    strips->add_option("--t-max", st_tmax, "Heights scanned in [-t_max, t_max]")->check(CLI::NonNegativeNumber);
    strips->add_option("--step", st_step, "Height step")->check(CLI::PositiveNumber);
    strips->add_option("--d-points", st_dpoints, "Intermediate catenoids in the sweep")->check(CLI::Range(1, 10000));
    strips->add_option("--out", st_out, "Report JSON path (default stdout)");
    strips->add_option("--csv", st_csv, "Margin table CSV path");

    // mesh / family
    struct MeshArgs {
        double H = 0.0, d = 0.0, rho_max = 5.0;
        int n = 64;
        std::size_t m = 64;
        std::string mode = "poincare";
        bool single = false, triangulate = false;
        std::string out;
        std::vector<double> d_list;
    } ms, fm;
    auto* mesh = app.add_subcommand("mesh", "Export a revolved surface as Wavefront OBJ");
    mesh->add_option("--H", ms.H)->required();
    mesh->add_option("--d", ms.d)->required();
    mesh->add_option("--rho-max", ms.rho_max);
    mesh->add_option("--n", ms.n, "Profile samples")->check(CLI::Range(2, 1000000));
    mesh->add_option("--m", ms.m, "Angular steps")->check(CLI::Range(3, 1000000));
    mesh->add_option("--mode", ms.mode, "poincare | cylinder")->check(CLI::IsMember({"poincare", "cylinder"}));
    mesh->add_flag("--single", ms.single, "Upper half only (no reflection)");
    mesh->add_flag("--triangulate", ms.triangulate, "Split quads into triangles");
    mesh->add_option("--out", ms.out, "OBJ path; metadata goes to <path>.json")->required();
    tol_flags.attach(mesh);

    auto* family = app.add_subcommand("family", "Export one mesh per d (nested frames)");
    family->add_option("--H", fm.H)->required();
    family->add_option("--d-list", fm.d_list, "Comma-separated d values")->required()->delimiter(',');
    family->add_option("--rho-max", fm.rho_max);
    family->add_option("--n", fm.n, "Profile samples")->check(CLI::Range(2, 1000000));
    family->add_option("--m", fm.m, "Angular steps")->check(CLI::Range(3, 1000000));
    family->add_option("--mode", fm.mode, "poincare | cylinder")->check(CLI::IsMember({"poincare", "cylinder"}));
    family->add_flag("--single", fm.single, "Upper halves only");
    family->add_flag("--triangulate", fm.triangulate, "Split quads into triangles");
    family->add_option("--out", fm.out, "Output directory")->required();
    tol_flags.attach(family);

    try {
        std::vector<std::string> args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Tolerances& tol = tol_flags.tol;
    try {
        if (nk->parsed()) {
            out << format_number(necksize(CmcParams(nk_H, nk_d))) << "\n";
        } else if (curve->parsed() || entire->parsed()) {
            const bool is_entire = entire->parsed();
            const CurveArgs& a = is_entire ? eg : cv;
            const ProfileCurve prof = is_entire ? entire_graph_profile(a.H, a.rho_max, a.n, tol)
                                                : profile(CmcParams(a.H, a.d), a.rho_max, a.n, tol);
            emit(to_csv(prof), a.out, out);
            if (!a.json.empty()) {
                Json j = envelope("profile", is_entire ? *entire : *curve, tol);
                j["profile"] = to_json(prof);
                write_text(a.json, dump(j));
            }
        } else if (appendix->parsed()) {
            va_opts.tolerances = tol;
            const auto cases = verify_appendix(va_H, va_d, va_opts);
            Json j = envelope("appendix_verification", *appendix, tol);
            j["cases"] = Json::array();
            bool pass = true;
            for (const AppendixCase& c : cases) {
                j["cases"].push_back(to_json(c));
                pass = pass && c.passed;
            }
            j["pass"] = pass;
            emit(dump(j), va_out, out);
            if (!pass) status = kExitCheckFailed;
        } else if (disjoint->parsed()) {
            if (!dj_d2 && !dj_solve) throw PreconditionError("disjoint: give --d2 or --solve-d0");
            const double d2 = dj_solve ? solve_d0(dj_H, dj_d1) : *dj_d2;
            const double t_max = dj_tmax ? *dj_tmax : default_t_max(dj_H, dj_d1, d2, tol);
            CertifyOptions opts;
            opts.grid_step = dj_step;
            opts.d2_is_threshold = dj_solve;
            opts.monotone_tolerance = dj_mono;
            opts.tolerances = tol;
            Json j;
            try {
                j = to_json(certify(dj_H, dj_d1, d2, t_max, opts));
            } catch (const CertificationFailure& f) {
                j = envelope("certification_failure", *disjoint, tol);
                j["reason"] = f.what();
                j["t"] = f.where();
                j["value"] = f.value();
                j["d2"] = d2;
                status = kExitCheckFailed;
            }
            j["config"] = config_echo(*disjoint);
            emit(dump(j), dj_out, out);
        } else if (strips->parsed()) {
            std::ifstream file(st_cert);
            Json doc;
            try {
                doc = Json::parse(file);
            } catch (const Json::exception& e) {
                throw PreconditionError(std::string("strips: cannot parse certificate: ") + e.what());
            }
            const DisjointnessCertificate cert = certificate_from_json(doc);
            Json j = envelope("strip_reports", *strips, cert.tolerances);
            j["certificate"] = {{"H", cert.H}, {"d1", cert.d1}, {"d2", cert.d2}, {"delta0", cert.delta0}};

            // The certificate's scan must match a fresh evaluation of the gap.
            const CmcParams p1(cert.H, cert.d1), p2(cert.H, cert.d2);
            double deviation = 0.0;
            double worst_t = 0.0;
            for (const GapSample& s : cert.scan) {
                const double fresh = b_inverse(p2, s.t, cert.tolerances) - b_inverse(p1, s.t, cert.tolerances);
                const double dev = std::isfinite(s.gap) ? std::abs(fresh - s.gap)
                                                        : std::numeric_limits<double>::infinity();
                if (dev > deviation) {
                    deviation = dev;
                    worst_t = s.t;
                }
            }
            const bool consistent = deviation <= 1e-8 && cert.delta0 > 0.0 && cert.delta0 <= cert.min_gap_observed;
            j["certificate_check"] = {{"consistent", consistent},
                                      {"max_deviation", std::isfinite(deviation) ? Json(deviation) : Json(nullptr)},
                                      {"worst_t", worst_t}};

            bool pass = consistent;
            try {
                const StripOffsets offsets = compute_offsets(cert);
                j["offsets"] = to_json(offsets);
                const auto t_grid = symmetric_grid(st_tmax, st_step);
                const StripReport claim = verify_strip_claim(cert, offsets, t_grid);
                const StripReport c3 = verify_c3_lemma(cert, t_grid);
                const StripReport remark =
                    remark_sweep(cert, offsets, interior_log_grid(cert.d1, cert.d2, st_dpoints), t_grid);
                j["strip_claim"] = to_json(claim);
                j["c3_lemma"] = to_json(c3);
                j["remark"] = to_json(remark);
                pass = pass && claim.pass && c3.pass && remark.pass;
                if (!st_csv.empty()) {
                    std::string csv = margins_csv(claim);
                    for (const StripReport* r : {&c3, &remark}) {
                        const std::string more = margins_csv(*r);
                        csv += more.substr(more.find('\n') + 1);
                    }
                    write_text(st_csv, csv);
                }
            } catch (const PreconditionError& e) {
                j["failure"] = {{"reason", e.what()}};
                pass = false;
            }
            j["pass"] = pass;
            emit(dump(j), st_out, out);
            if (!pass) status = kExitCheckFailed;
        } else if (mesh->parsed()) {
            const CmcParams p(ms.H, ms.d);
            RevolveOptions opts;
            opts.angular_steps = ms.m;
            opts.embedding = parse_embedding(ms.mode);
            opts.doubled = !ms.single && !p.is_entire_graph();
            opts.triangulate = ms.triangulate;
            const SurfaceMesh surf = revolve(profile(p, ms.rho_max, ms.n, tol), opts);
            export_obj(surf, ms.out);
            Json j = envelope("mesh", *mesh, tol);
            j["mesh"] = to_json(surf.info);
            j["face_count"] = surf.quads.size() + surf.triangles.size();
            write_text(ms.out + ".json", dump(j));
        } else if (family->parsed()) {
            RevolveOptions opts;
            opts.angular_steps = fm.m;
            opts.embedding = parse_embedding(fm.mode);
            opts.doubled = !fm.single;
            opts.triangulate = fm.triangulate;
            const auto frames = family_frames(fm.H, fm.d_list, fm.rho_max, fm.n, opts, tol);
            fs::create_directories(fm.out);
            Json index = envelope("family", *family, tol);
            index["frames"] = Json::array();
            for (std::size_t k = 0; k < frames.size(); ++k) {
                char name[32];
                std::snprintf(name, sizeof name, "frame_%03zu.obj", k);
                const fs::path path = fs::path(fm.out) / name;
                export_obj(frames[k], path);
                Json meta = envelope("mesh", *family, tol);
                meta["mesh"] = to_json(frames[k].info);
                meta["face_count"] = frames[k].quads.size() + frames[k].triangles.size();
                write_text(path.string() + ".json", dump(meta));
                index["frames"].push_back({{"d", fm.d_list[k]},
                                           {"necksize", necksize(CmcParams(fm.H, fm.d_list[k]))},
                                           {"file", name}});
            }
            write_text(fs::path(fm.out) / "family.json", dump(index));
        }
    } catch (const CertificationFailure& e) {
        err << "hcat: check failed: " << e.what() << " at t=" << e.where() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "hcat: " << e.what() << "\n";
        return kExitUsage;
    }
    return status;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace hcat::cli
