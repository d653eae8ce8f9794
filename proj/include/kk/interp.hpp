#pragma once

#include <vector>

namespace kk {

/// Natural cubic spline through (x_i, y_i), x strictly increasing.
class CubicSpline {
public:
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::size_t interval(double x) const;
    std::vector<double> x_, y_, m_;  // m_: second derivatives at knots
};

/// Monotone (Fritsch-Carlson) piecewise-cubic Hermite interpolant:
/// shape-preserving, no overshoot on monotone data.
class PchipInterpolant {
public:
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::size_t interval(double x) const;
    std::vector<double> x_, y_, d_;  // d_: node derivatives
};

}  // namespace kk
