#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hcat/catenoid.hpp"

namespace hcat {

enum class EmbeddingMode {
    PoincareDisk,   // (rho, theta) -> tanh(rho/2) (cos theta, sin theta)
    CylinderPolar,  // (rho, theta) -> rho (cos theta, sin theta)
};

std::string_view to_string(EmbeddingMode mode);
EmbeddingMode parse_embedding(std::string_view name);

struct Vec3 {
    double x, y, z;
};

struct MeshInfo {
    double H = 0.0;
    double d = 0.0;
    EmbeddingMode embedding = EmbeddingMode::PoincareDisk;
    std::size_t profile_samples = 0;
    std::size_t rows = 0;
    std::size_t angular_steps = 0;
    bool doubled = false;
    bool triangulated = false;
};

/// Revolution grid: `rows` profile rows of `angular_steps` vertices each, stored
/// row-major from the lowest height up. The angular direction wraps. Faces are
/// quads unless the mesh was triangulated, in which case `quads` is empty.
struct SurfaceMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::size_t, 4>> quads;
    std::vector<std::array<std::size_t, 3>> triangles;
    MeshInfo info;
};

struct RevolveOptions {
    std::size_t angular_steps = 64;
    EmbeddingMode embedding = EmbeddingMode::PoincareDisk;
    bool doubled = true;  // add the reflection t -> -t, sharing the neck row
    bool triangulate = false;
};

SurfaceMesh revolve(const ProfileCurve& profile, const RevolveOptions& options);

/// One mesh per d. The entire graph (d = -2H) is never doubled.
std::vector<SurfaceMesh> family_frames(double H, const std::vector<double>& d_list, double rho_max,
                                       int n, const RevolveOptions& options,
                                       const Tolerances& tol = {});

/// Wavefront OBJ text: `v x y z` lines then 1-based `f` lines, numbers in %.17g.
std::string to_obj(const SurfaceMesh& mesh);
/// CSV with header `rho,t`.
std::string to_csv(const ProfileCurve& profile);

void export_obj(const SurfaceMesh& mesh, const std::filesystem::path& path);
void export_csv(const ProfileCurve& profile, const std::filesystem::path& path);

/// Writes `text` to `path`, throwing IoError on failure.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace hcat
