#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hcat/geometry.hpp"

namespace hcat::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611u);
    return engine;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

inline HypPoint random_point(double rho_max) {
    return {uniform(0.0, rho_max), uniform(-std::numbers::pi, std::numbers::pi)};
}

inline bool rel_close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Rotation about the origin.
inline HypPoint rotate(const HypPoint& p, double angle) {
    return p.rho() == 0.0 ? p : HypPoint(p.rho(), p.theta() + angle);
}

// Point at distance r from c in direction phi (measured in c's frame).
inline HypPoint point_on_circle(const HypCircle& c, double phi) {
    const HypPoint local = translate_along_geodesic(HypPoint(c.radius(), phi), c.center().rho());
    return rotate(local, c.center().theta());
}

// Brute-force classification: walk c1 and count sign changes of dist(., center2) - r2.
// Only separates crossing (2 changes) from non-crossing (0).
inline int sampled_sign_changes(const HypCircle& c1, const HypCircle& c2, int samples = 10000) {
    int changes = 0;
    double prev = 0.0;
    for (int k = 0; k <= samples; ++k) {
        const double phi = 2.0 * std::numbers::pi * (k % samples) / samples;
        const double s = hyp_distance(point_on_circle(c1, phi), c2.center()) - c2.radius();
        if (k > 0 && (s > 0.0) != (prev > 0.0)) ++changes;
        prev = s;
    }
    return changes;
}

// Length of the upper half-plane geodesic (a Euclidean semicircle centred on the
// real axis) between the images of p and q, summed as a polyline in |dw| / Im w.
inline double polyline_length(const HypPoint& p, const HypPoint& q, int segments) {
    auto to_uhp = [](const HypPoint& a) {
        const std::complex<double> z = std::polar(std::tanh(0.5 * a.rho()), a.theta());
        return std::complex<double>(0.0, 1.0) * (1.0 + z) / (1.0 - z);
    };
    const std::complex<double> w1 = to_uhp(p);
    const std::complex<double> w2 = to_uhp(q);
    const double c = (std::norm(w2) - std::norm(w1)) / (2.0 * (w2.real() - w1.real()));
    const double R = std::abs(w1 - c);
    const double a1 = std::arg(w1 - c);
    const double a2 = std::arg(w2 - c);
    double length = 0.0;
    std::complex<double> prev = w1;
    for (int k = 1; k <= segments; ++k) {
        const double a = a1 + (a2 - a1) * k / segments;
        const std::complex<double> cur = c + std::polar(R, a);
        length += std::abs(cur - prev) / (0.5 * (cur.imag() + prev.imag()));
        prev = cur;
    }
    return length;
}

}  // namespace hcat::test
