#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "kk/quadrature.hpp"
#include "kk/signal_catalog.hpp"
#include "kk/types.hpp"

namespace kk {

using LaplaceFn = std::function<Complex(Complex)>;

/// F(s) = integral_0^inf e^{-st} f(t) dt by adaptive quadrature with an
/// envelope-derived truncation point. Requires a causal signal evaluated
/// right of its abscissa of absolute convergence.
Complex laplace_transform(const CausalSignal& signal, ComplexPoint s,
                          const quadrature::Config& cfg = {});

struct LambdaEstimate {
    double value = 0.0;
    bool at_lower_bound = false;  // converged at bracket.low: transform is
                                  // entire as far as the bracket can see
};

/// Bisection estimate (bracket width 1e-3) of the smallest s' at which
/// integral_0^inf e^{-s't}|f(t)| dt converges numerically.
LambdaEstimate estimate_lambda0(const CausalSignal& signal,
                                std::pair<double, double> bracket,
                                const quadrature::Config& cfg = {});

inline std::vector<double> default_riemann_lebesgue_sequence() {
    return {1.0, 10.0, 1e2, 1e3, 1e4, 1e5};
}

/// |F(s' + i s'')| along an increasing sequence of s'.
std::vector<double> riemann_lebesgue_probe(
    const CausalSignal& signal, double s_double_prime,
    const std::vector<double>& s_prime_sequence =
        default_riemann_lebesgue_sequence(),
    const quadrature::Config& cfg = {});

/// F(omega) = integral_0^inf e^{i omega t} f(t) dt, evaluated as the Laplace
/// transform at s = -i omega. Requires l1_membership == Yes.
Complex fourier_transform(const CausalSignal& signal, double omega,
                          const quadrature::Config& cfg = {});

/// Fourier transforms of the truncations f(t)[theta(t+n) - theta(t-n)],
/// i.e. integral_0^n e^{i omega t} f(t) dt for each n.
std::vector<Complex> truncated_fourier_sequence(
    const CausalSignal& signal, const std::vector<int>& n_values, double omega,
    const quadrature::Config& cfg = {});

struct BromwichResult {
    double value = 0.0;
    double quadrature_error = 0.0;
    double truncation_error = 0.0;  // estimated from the 1/|s| decay at cutoff
};

/// Inverse transform along the vertical line Re s = a, truncated to
/// |Im s| <= cutoff:  (1/2pi) Re integral F(a+iy) e^{(a+iy)t} dy.
BromwichResult bromwich_inverse(const LaplaceFn& transform, double lambda0,
                                double t, double a, double cutoff,
                                const quadrature::Config& cfg = {});

}  // namespace kk
