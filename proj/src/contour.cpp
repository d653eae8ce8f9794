#include "kk/contour.hpp"

#include <cmath>
#include <stdexcept>

namespace kk {

namespace {

// Arc integrals oscillate fastest near theta = +-pi/2 for transforms with
// e^{-s} factors; seed the adaptive rule with panels graded toward the ends.
quadrature::Estimate integrate_arc(
    const std::function<Complex(double)>& f, double theta_a, double theta_b,
    double radius, const quadrature::Config& cfg) {
    int levels = std::max(2, static_cast<int>(std::log2(std::max(radius, 2.0))));
    std::vector<double> knots;
    const double span = theta_b - theta_a;
    for (int k = levels; k >= 1; --k)
        knots.push_back(theta_a + span * std::ldexp(1.0, -k - 1));
    knots.push_back(theta_a + span * 0.5);
    for (int k = 1; k <= levels; ++k)
        knots.push_back(theta_b - span * std::ldexp(1.0, -k - 1));

    quadrature::Config panel_cfg = cfg;
    panel_cfg.abs_tol = cfg.abs_tol / static_cast<double>(knots.size() + 1);
    quadrature::Estimate total;
    double lo = theta_a;
    for (double hi : knots) {
        total += quadrature::integrate(f, lo, hi, panel_cfg);
        lo = hi;
    }
    total += quadrature::integrate(f, lo, theta_b, panel_cfg);
    return total;
}

quadrature::Estimate line_segment(const LaplaceFn& laplace, double omega,
                                  double y_lo, double y_hi,
                                  const quadrature::Config& cfg) {
    auto f = [&](double y) {
        Complex s(0.0, y);
        return integrand_H(laplace, s, omega) * Complex(0.0, 1.0);
    };
    return quadrature::integrate(f, y_lo, y_hi, cfg);
}

quadrature::Estimate small_arc(const LaplaceFn& laplace, double omega,
                               double eps, const quadrature::Config& cfg) {
    // s = -i*omega + eps*e^{i phi}, phi: -pi/2 -> pi/2 (counterclockwise,
    // bulging into the right half-plane), ds = i*eps*e^{i phi} dphi.
    auto f = [&](double phi) {
        Complex e = std::polar(eps, phi);
        Complex s = Complex(0.0, -omega) + e;
        return laplace(s) / e * Complex(0.0, 1.0) * e;
    };
    return quadrature::integrate(f, -M_PI / 2.0, M_PI / 2.0, cfg);
}

quadrature::Estimate large_arc(const LaplaceFn& laplace, double omega, double R,
                               const quadrature::Config& cfg) {
    // s = R e^{i theta}, theta: pi/2 -> -pi/2, ds = i s dtheta.
    auto f = [&](double theta) {
        Complex s = std::polar(R, theta);
        return integrand_H(laplace, s, omega) * Complex(0.0, 1.0) * s;
    };
    return integrate_arc(f, M_PI / 2.0, -M_PI / 2.0, R, cfg);
}

}  // namespace

void ContourSpec::validate() const {
    if (!(epsilon > 0.0) || !(radius_R > epsilon))
        throw std::invalid_argument("contour: need radius_R > epsilon > 0");
    if (!(std::abs(omega) + epsilon < radius_R))
        throw std::invalid_argument(
            "contour: pole arc must lie strictly inside the big arc "
            "(|omega| + epsilon < radius_R)");
}

Complex integrand_H(const LaplaceFn& laplace, Complex s, double omega) {
    Complex denom = s + Complex(0.0, omega);
    if (std::abs(denom) < 1e-14 * std::max(1.0, std::abs(s)))
        throw std::domain_error("integrand_H: evaluation at the pole s = -i*omega");
    return laplace(s) / denom;
}

ContourBreakdown integrate_contour(const LaplaceFn& laplace,
                                   const ContourSpec& spec,
                                   const quadrature::Config& cfg) {
    spec.validate();
    cfg.validate();
    ContourBreakdown out;
    quadrature::Estimate lower = line_segment(
        laplace, spec.omega, -spec.radius_R, -spec.omega - spec.epsilon, cfg);
    quadrature::Estimate upper = line_segment(
        laplace, spec.omega, -spec.omega + spec.epsilon, spec.radius_R, cfg);
    quadrature::Estimate garc = small_arc(laplace, spec.omega, spec.epsilon, cfg);
    quadrature::Estimate Garc = large_arc(laplace, spec.omega, spec.radius_R, cfg);
    out.segment_lower = lower.value;
    out.segment_upper = upper.value;
    out.small_arc = garc.value;
    out.large_arc = Garc.value;
    out.total = lower.value + upper.value + garc.value + Garc.value;
    out.error_budget = lower.error + upper.error + garc.error + Garc.error;
    return out;
}

std::vector<Complex> small_arc_limit(const LaplaceFn& laplace, double omega,
                                     const std::vector<double>& epsilon_sequence,
                                     const quadrature::Config& cfg) {
    for (std::size_t i = 0; i < epsilon_sequence.size(); ++i) {
        if (!(epsilon_sequence[i] > 0.0))
            throw std::invalid_argument("small_arc_limit: radii must be > 0");
        if (i > 0 && !(epsilon_sequence[i] < epsilon_sequence[i - 1]))
            throw std::invalid_argument(
                "small_arc_limit: radii must be decreasing");
    }
    const Complex limit =
        Complex(0.0, M_PI) * laplace(Complex(0.0, -omega));
    std::vector<Complex> out;
    out.reserve(epsilon_sequence.size());
    for (double eps : epsilon_sequence)
        out.push_back(small_arc(laplace, omega, eps, cfg).value - limit);
    return out;
}

std::vector<double> large_arc_decay(const LaplaceFn& laplace, double omega,
                                    const std::vector<double>& R_sequence,
                                    const quadrature::Config& cfg) {
    for (std::size_t i = 0; i < R_sequence.size(); ++i) {
        if (!(R_sequence[i] > 2.0 * std::abs(omega)))
            throw std::invalid_argument(
                "large_arc_decay: radii must exceed 2|omega|");
        if (i > 0 && !(R_sequence[i] > R_sequence[i - 1]))
            throw std::invalid_argument(
                "large_arc_decay: radii must be increasing");
    }
    std::vector<double> out;
    out.reserve(R_sequence.size());
    for (double R : R_sequence)
        out.push_back(std::abs(large_arc(laplace, omega, R, cfg).value));
    return out;
}

bool kernel_bound_check(double omega, double ell, double R,
                        const std::vector<double>& theta_samples) {
    if (!(ell > 1.0))
        throw std::invalid_argument("kernel_bound_check: need ell > 1");
    if (!(R > 0.0))
        throw std::invalid_argument("kernel_bound_check: need R > 0");
    for (double theta : theta_samples) {
        if (!(theta > -M_PI / 2.0) || !(theta < M_PI / 2.0))
            throw std::invalid_argument(
                "kernel_bound_check: theta samples must lie in (-pi/2, pi/2)");
        Complex s = std::polar(R, theta);
        double ratio = std::abs(s / (s + Complex(0.0, omega)));
        if (ratio > ell * (1.0 + 1e-12)) return false;
    }
    return true;
}

}  // namespace kk
