#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kk/interp.hpp"

TEST_SUITE("interp") {

TEST_CASE("cubic spline reproduces smooth data between knots") {
    std::vector<double> x, y;
    for (int i = 0; i <= 200; ++i) {
        double t = -5.0 + 10.0 * i / 200.0;
        x.push_back(t);
        y.push_back(1.0 / (1.0 + t * t));
    }
    kk::CubicSpline s(x, y);
    for (double t : {-4.97, -1.234, 0.011, 2.5001, 4.7}) {
        CHECK(s(t) == doctest::Approx(1.0 / (1.0 + t * t)).epsilon(1e-5));
        double d = -2.0 * t / ((1.0 + t * t) * (1.0 + t * t));
        CHECK(s.derivative(t) == doctest::Approx(d).epsilon(1e-3));
    }
}

TEST_CASE("spline is exact at the knots") {
    std::vector<double> x{0, 1, 2, 3}, y{1, -2, 0.5, 4};
    kk::CubicSpline s(x, y);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(s(x[i]) == doctest::Approx(y[i]).epsilon(1e-14));
}

TEST_CASE("pchip preserves monotone data") {
    std::vector<double> x{0, 1, 2, 3, 4, 5};
    std::vector<double> y{0, 0.1, 0.2, 3.0, 3.05, 3.1};  // sharp shoulder
    kk::PchipInterpolant p(x, y);
    double prev = p(0.0);
    for (int i = 1; i <= 500; ++i) {
        double v = p(5.0 * i / 500.0);
        CHECK(v >= prev - 1e-12);  // no overshoot / oscillation
        prev = v;
    }
    CHECK(p(5.0) == doctest::Approx(3.1));
}

TEST_CASE("pchip is exact on linear data") {
    std::vector<double> x{0, 0.5, 1.7, 2.0};
    std::vector<double> y;
    for (double t : x) y.push_back(3.0 * t - 1.0);
    kk::PchipInterpolant p(x, y);
    for (double t : {0.1, 0.77, 1.9})
        CHECK(p(t) == doctest::Approx(3.0 * t - 1.0).epsilon(1e-13));
}

TEST_CASE("invalid node sets are rejected") {
    CHECK_THROWS_AS(kk::CubicSpline({1.0, 1.0}, {0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(kk::PchipInterpolant({1.0}, {0.0}), std::invalid_argument);
}

}  // TEST_SUITE
