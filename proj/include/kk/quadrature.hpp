#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>

namespace kk::quadrature {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

/// Tolerances and budget for the adaptive integrators.
struct Config {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 4000;
    std::optional<double> truncation_time;  // overrides the envelope-derived cutoff

    void validate() const;
};

struct Estimate {
    Complex value{0.0, 0.0};
    double error = 0.0;        // accumulated absolute error estimate
    std::size_t evaluations = 0;

    Estimate& operator+=(const Estimate& other) {
        value += other.value;
        error += other.error;
        evaluations += other.evaluations;
        return *this;
    }
};

/// Adaptive Gauss-Kronrod 7/15 on a finite interval. Splits the worst panel
/// until the error estimate meets max(abs_tol, rel_tol*|value|); throws
/// std::runtime_error when max_subdivisions is exhausted first.
Estimate integrate(const Integrand& f, double a, double b, const Config& cfg);

/// Same rule on a finite interval whose left endpoint carries an integrable
/// singularity: the interval is pre-split into panels graded geometrically
/// toward `a` before adaptive refinement.
Estimate integrate_graded_left(const Integrand& f, double a, double b,
                               const Config& cfg);

/// Finite interval with a phasor of angular frequency `omega` in the
/// integrand: the interval is cut into half-period panels (compensated
/// summation) so the adaptive rule never sees more than one sign change.
/// Falls back to plain `integrate` when the interval holds few oscillations.
Estimate integrate_oscillatory(const Integrand& f, double a, double b,
                               double omega, const Config& cfg);

/// Improper oscillatory integral over [a, inf) for an integrand with an
/// eventually-decaying envelope: half-period panel sums accelerated by an
/// iterated Aitken transform of the partial-sum sequence.
Estimate integrate_oscillatory_tail(const Integrand& f, double a, double omega,
                                    const Config& cfg);

}  // namespace kk::quadrature
