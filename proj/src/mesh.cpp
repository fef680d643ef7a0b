#include "hcat/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "hcat/errors.hpp"

namespace hcat {

namespace {

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

std::string_view to_string(EmbeddingMode mode) {
    return mode == EmbeddingMode::PoincareDisk ? "poincare" : "cylinder";
}

EmbeddingMode parse_embedding(std::string_view name) {
    if (name == "poincare") return EmbeddingMode::PoincareDisk;
    if (name == "cylinder") return EmbeddingMode::CylinderPolar;
    throw PreconditionError("unknown embedding '" + std::string(name) + "' (poincare|cylinder)");
}

SurfaceMesh revolve(const ProfileCurve& profile, const RevolveOptions& options) {
    const std::size_t m = options.angular_steps;
    if (m < 3) throw PreconditionError("revolve: need at least 3 angular steps");
    const auto& s = profile.samples();
    const std::size_t n = s.size();

    std::vector<ProfileSample> rows;
    if (options.doubled) {
        for (std::size_t k = n - 1; k >= 1; --k) rows.push_back({s[k].rho, -s[k].t});
    }
    rows.insert(rows.end(), s.begin(), s.end());

    SurfaceMesh mesh;
    mesh.info = {profile.params().H(), profile.params().d(), options.embedding, n, rows.size(), m,
                 options.doubled, options.triangulate};
    mesh.vertices.reserve(rows.size() * m);
    for (const ProfileSample& row : rows) {
        const double radius = options.embedding == EmbeddingMode::PoincareDisk ? std::tanh(0.5 * row.rho) : row.rho;
        for (std::size_t j = 0; j < m; ++j) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
            mesh.vertices.push_back({radius * std::cos(theta), radius * std::sin(theta), row.t});
        }
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t jn = (j + 1) % m;
            const std::array<std::size_t, 4> q{i * m + j, i * m + jn, (i + 1) * m + jn, (i + 1) * m + j};
            if (options.triangulate) {
                mesh.triangles.push_back({q[0], q[1], q[2]});
                mesh.triangles.push_back({q[0], q[2], q[3]});
            } else {
                mesh.quads.push_back(q);
            }
        }
    }
    return mesh;
}

std::vector<SurfaceMesh> family_frames(double H, const std::vector<double>& d_list, double rho_max,
                                       int n, const RevolveOptions& options, const Tolerances& tol) {
    std::vector<SurfaceMesh> frames;
    frames.reserve(d_list.size());
    for (double d : d_list) {
        const CmcParams p(H, d);
        RevolveOptions opts = options;
        opts.doubled = options.doubled && !p.is_entire_graph();
        frames.push_back(revolve(profile(p, rho_max, n, tol), opts));
    }
    return frames;
}

std::string to_obj(const SurfaceMesh& mesh) {
    std::string out;
    out.reserve(mesh.vertices.size() * 64);
    for (const Vec3& v : mesh.vertices) {
        out += "v ";
        append_number(out, v.x);
        out += ' ';
        append_number(out, v.y);
        out += ' ';
        append_number(out, v.z);
        out += '\n';
    }
    for (const auto& q : mesh.quads) {
        out += "f";
        for (std::size_t idx : q) out += ' ' + std::to_string(idx + 1);
        out += '\n';
    }
    for (const auto& tri : mesh.triangles) {
        out += "f";
        for (std::size_t idx : tri) out += ' ' + std::to_string(idx + 1);
        out += '\n';
    }
    return out;
}

std::string to_csv(const ProfileCurve& profile) {
    std::string out = "rho,t\n";
    for (const ProfileSample& s : profile.samples()) {
        append_number(out, s.rho);
        out += ',';
        append_number(out, s.t);
        out += '\n';
    }
    return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file) throw IoError("failed writing '" + path.string() + "'");
}

void export_obj(const SurfaceMesh& mesh, const std::filesystem::path& path) {
    if (mesh.vertices.empty()) throw PreconditionError("export_obj: empty mesh");
    write_text(path, to_obj(mesh));
}

void export_csv(const ProfileCurve& profile, const std::filesystem::path& path) {
    write_text(path, to_csv(profile));
}

}  // namespace hcat
