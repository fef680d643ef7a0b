#pragma once

#include <cmath>

namespace hcat {

/// arccosh(1 + y) for y >= 0, accurate when y is tiny.
inline double acosh1p(double y) {
    if (y <= 0.0) return 0.0;
    if (y > 1e8) return std::log(2.0) + std::log1p(y);
    return std::log1p(y + std::sqrt(y * (y + 2.0)));
}

/// arccosh(x) for x >= 1; uses the log1p branch when x - 1 < 1e-4.
inline double acosh_stable(double x) {
    if (x - 1.0 < 1e-4) return acosh1p(x - 1.0);
    if (x > 1e8) return std::log(2.0 * x);
    return std::log(x + std::sqrt(x * x - 1.0));
}

/// cosh(a) - cosh(b) without cancellation.
inline double cosh_diff(double a, double b) {
    return 2.0 * std::sinh(0.5 * (a + b)) * std::sinh(0.5 * (a - b));
}

}  // namespace hcat
