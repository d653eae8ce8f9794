#pragma once

#include <vector>

#include "kk/quadrature.hpp"
#include "kk/transforms.hpp"
#include "kk/types.hpp"

namespace kk {

/// Geometry of the pole-excluding path: a large right-half-plane semicircle
/// of radius R, a small semicircle of radius epsilon around s0 = -i*omega,
/// and the two connecting segments on the imaginary axis.
struct ContourSpec {
    double omega = 0.0;
    double radius_R = 0.0;
    double epsilon = 0.0;

    void validate() const;
};

struct ContourBreakdown {
    Complex segment_lower;  // line from -iR to -i(omega+eps)
    Complex segment_upper;  // line from -i(omega-eps) to iR
    Complex small_arc;      // gamma(eps), counterclockwise around -i*omega
    Complex large_arc;      // Gamma(R) through the right half-plane
    Complex total;          // always the sum of the four segments
    double error_budget = 0.0;  // summed quadrature error estimates
};

/// H(s, omega) = L(s) / (s + i*omega); evaluation at the pole throws.
Complex integrand_H(const LaplaceFn& laplace, Complex s, double omega);

/// Integrates H along the four segments. The transform must be analytic on
/// the closed right half-plane (asserted by the caller via L1 membership).
ContourBreakdown integrate_contour(const LaplaceFn& laplace,
                                   const ContourSpec& spec,
                                   const quadrature::Config& cfg = {});

/// Deviations of the small-arc integral from i*pi*L(-i*omega) for a
/// decreasing sequence of radii.
std::vector<Complex> small_arc_limit(const LaplaceFn& laplace, double omega,
                                     const std::vector<double>& epsilon_sequence,
                                     const quadrature::Config& cfg = {});

/// |integral over Gamma(R)| for an increasing sequence of radii.
std::vector<double> large_arc_decay(const LaplaceFn& laplace, double omega,
                                    const std::vector<double>& R_sequence,
                                    const quadrature::Config& cfg = {});

/// True iff |s/(s+i*omega)| <= ell at every sampled s = R e^{i theta}.
/// Guaranteed whenever R >= ell*|omega|/(ell-1).
bool kernel_bound_check(double omega, double ell, double R,
                        const std::vector<double>& theta_samples);

}  // namespace kk
