#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hcat/errors.hpp"
#include "hcat/quadrature.hpp"
#include "hcat/special.hpp"

using namespace hcat;

TEST_CASE("polynomials are exact") {
    const auto r = quad::integrate([](double x) { return x * x * x * x * x; }, 0.0, 1.0, 1e-14);
    CHECK(r.value == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(r.panels == 1);
}

TEST_CASE("smooth and peaked integrands") {
    CHECK(quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-13).value ==
          doctest::Approx(2.0).epsilon(1e-14));
    const double k = 1e4;
    const auto peak = quad::integrate([k](double x) { return 1.0 / (1.0 + k * (x - 0.3) * (x - 0.3)); }, 0.0, 1.0, 1e-12);
    const double exact = (std::atan(std::sqrt(k) * 0.7) + std::atan(std::sqrt(k) * 0.3)) / std::sqrt(k);
    CHECK(std::abs(peak.value - exact) < 1e-12);
    CHECK(peak.panels > 1);
}

TEST_CASE("orientation and empty interval") {
    auto f = [](double x) { return std::exp(x); };
    CHECK(quad::integrate(f, 1.0, 0.0, 1e-13).value == doctest::Approx(-(std::exp(1.0) - 1.0)).epsilon(1e-14));
    CHECK(quad::integrate(f, 2.0, 2.0, 1e-13).value == 0.0);
}

TEST_CASE("panel budget") {
    auto rough = [](double x) { return std::sqrt(std::abs(x - 0.123456789)); };
    CHECK_THROWS_AS(quad::integrate(rough, 0.0, 1.0, 1e-15, 5), ConvergenceError);
}

TEST_CASE("stable special functions") {
    CHECK(acosh1p(0.0) == 0.0);
    CHECK(acosh1p(1e-20) == doctest::Approx(std::sqrt(2e-20)).epsilon(1e-12));
    CHECK(acosh1p(1e12) == doctest::Approx(std::acosh(1e12 + 1.0)).epsilon(1e-15));
    for (double x : {1.0 + 1e-6, 1.5, 3.0, 1e3}) {
        CHECK(acosh_stable(x) == doctest::Approx(std::acosh(x)).epsilon(1e-12));
    }
    CHECK(cosh_diff(2.0, 1.0) == doctest::Approx(std::cosh(2.0) - std::cosh(1.0)).epsilon(1e-15));
    CHECK(cosh_diff(1.0 + 1e-9, 1.0) == doctest::Approx(std::sinh(1.0) * 1e-9).epsilon(1e-7));
}
