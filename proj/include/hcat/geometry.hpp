#pragma once

#include <string_view>

namespace hcat {

/// Point of the hyperbolic plane in geodesic polar coordinates about the origin.
///
/// `rho` is the hyperbolic distance to the origin and `theta` is kept in
/// (-pi, pi]. The origin is always stored with theta = 0.
class HypPoint {
public:
    HypPoint() = default;
    HypPoint(double rho, double theta);

    static HypPoint origin() { return {}; }

    double rho() const noexcept { return rho_; }
    double theta() const noexcept { return theta_; }

    bool operator==(const HypPoint&) const = default;

private:
    double rho_ = 0.0;
    double theta_ = 0.0;
};

/// Metric circle: all points at hyperbolic distance `radius` from `center`.
class HypCircle {
public:
    HypCircle(HypPoint center, double radius);

    const HypPoint& center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }

private:
    HypPoint center_;
    double radius_;
};

enum class IntersectionClass {
    CoincidentCircles,
    DisjointOutside,
    DisjointNested,
    TangentExternal,
    TangentInternal,
    TwoPoints,
};

std::string_view to_string(IntersectionClass c);

inline constexpr double kTangencyTolerance = 1e-12;

/// Wraps an angle into (-pi, pi].
double canonical_angle(double theta);

double hyp_distance(const HypPoint& p, const HypPoint& q);

/// Hyperbolic translation by signed length `s` along the geodesic theta in {0, pi},
/// carrying the origin to (s, 0) for s > 0 and to (|s|, pi) for s < 0.
HypPoint translate_along_geodesic(const HypPoint& p, double s);

IntersectionClass classify_circle_intersection(const HypCircle& c1, const HypCircle& c2,
                                               double tol = kTangencyTolerance);

/// Smallest slack of the strict two-point conditions |r1 - r2| < D < r1 + r2.
/// Positive exactly when the circles cross in two points (up to rounding).
double two_point_margin(const HypCircle& c1, const HypCircle& c2);

}  // namespace hcat
