#include "hcat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hcat/errors.hpp"
#include "hcat/special.hpp"

namespace hcat {

namespace {

}  // namespace

double canonical_angle(double theta) {
    constexpr double pi = std::numbers::pi;
    double t = std::remainder(theta, 2.0 * pi);  // in [-pi, pi]
    if (t <= -pi) t += 2.0 * pi;
    return t;
}

HypPoint::HypPoint(double rho, double theta) {
    if (!(rho >= 0.0) || !std::isfinite(theta)) {
        throw PreconditionError("HypPoint: rho must be >= 0 and theta finite");
    }
    rho_ = rho;
    theta_ = rho == 0.0 ? 0.0 : canonical_angle(theta);
}

HypCircle::HypCircle(HypPoint center, double radius) : center_(center), radius_(radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw PreconditionError("HypCircle: radius must be positive and finite");
    }
}

std::string_view to_string(IntersectionClass c) {
    switch (c) {
        case IntersectionClass::CoincidentCircles: return "CoincidentCircles";
        case IntersectionClass::DisjointOutside: return "DisjointOutside";
        case IntersectionClass::DisjointNested: return "DisjointNested";
        case IntersectionClass::TangentExternal: return "TangentExternal";
        case IntersectionClass::TangentInternal: return "TangentInternal";
        case IntersectionClass::TwoPoints: return "TwoPoints";
    }
    return "?";
}

double hyp_distance(const HypPoint& p, const HypPoint& q) {
    // cosh D - 1 = 2 sinh^2((rp - rq)/2) + 2 sinh rp sinh rq sin^2(dtheta/2)
    const double dtheta = p.theta() - q.theta();
    const double s = std::sin(0.5 * dtheta);
    const double sh_half = std::sinh(0.5 * (p.rho() - q.rho()));
    const double excess = 2.0 * sh_half * sh_half +
                          2.0 * std::sinh(p.rho()) * std::sinh(q.rho()) * s * s;
    return acosh1p(excess);
}

HypPoint translate_along_geodesic(const HypPoint& p, double s) {
    if (s == 0.0) return p;
    // Boost of rapidity s on (x0, x1) = (cosh rho, sinh rho cos theta).
    // x1' = sinh s cosh rho + cosh s sinh rho cos theta, split by the sign of cos theta.
    const double rho = p.rho();
    const double half = 0.5 * p.theta();
    const double spread = 2.0 * std::cosh(s) * std::sinh(rho);
    const double x1 = std::cos(p.theta()) >= 0.0
                          ? std::sinh(s + rho) - spread * std::sin(half) * std::sin(half)
                          : std::sinh(s - rho) + spread * std::cos(half) * std::cos(half);
    const double x2 = std::sinh(rho) * std::sin(p.theta());
    // The image's radius is the distance from p to the preimage of the origin.
    const HypPoint preimage(std::abs(s), s > 0.0 ? std::numbers::pi : 0.0);
    const double rho_new = hyp_distance(p, preimage);
    if (rho_new == 0.0) return {};
    return {rho_new, std::atan2(x2, x1)};
}

IntersectionClass classify_circle_intersection(const HypCircle& c1, const HypCircle& c2,
                                               double tol) {
    const double dist = hyp_distance(c1.center(), c2.center());
    const double r1 = c1.radius();
    const double r2 = c2.radius();
    const double diff = std::abs(r1 - r2);
    const double sum = r1 + r2;

    if (dist <= tol && diff <= tol) return IntersectionClass::CoincidentCircles;
    if (std::abs(dist - sum) <= tol) return IntersectionClass::TangentExternal;
    if (std::abs(dist - diff) <= tol) return IntersectionClass::TangentInternal;
    if (dist > sum) return IntersectionClass::DisjointOutside;
    if (dist < diff) return IntersectionClass::DisjointNested;
    return IntersectionClass::TwoPoints;
}

double two_point_margin(const HypCircle& c1, const HypCircle& c2) {
    const double dist = hyp_distance(c1.center(), c2.center());
    return std::min(dist - std::abs(c1.radius() - c2.radius()),
                    c1.radius() + c2.radius() - dist);
}

}  // namespace hcat
