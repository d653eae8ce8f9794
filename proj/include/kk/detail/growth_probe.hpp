#pragma once

#include <functional>
#include <vector>

#include "kk/signal_catalog.hpp"

namespace kk::detail {

// Smallest t used when a signal declares an integrable singularity at t=0.
constexpr double kEndpointFloor = 1e-12;
// Partial integrals beyond this are treated as divergent without further work.
constexpr double kGrowthCap = 1e30;

struct GrowthProbe {
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;
    double final_partial = 0.0;
    double x_max = 0.0;
    std::vector<double> partials;  // one entry per probe point reached
};

/// Accumulates the integral of a non-negative integrand from x0 through each
/// schedule point and classifies the growth of the partial-integral sequence.
/// With treat_nonfinite_as_divergent, overflow inside a panel yields verdict
/// No instead of an exception (used by the weighted convergence probes).
GrowthProbe probed_partial_integrals(const std::function<double(double)>& f,
                                     double x0,
                                     const std::vector<double>& schedule,
                                     double tol,
                                     bool treat_nonfinite_as_divergent);

/// Endpoint-singularity sweep: partial integrals over [eps, t_ref] for
/// eps = 1e-1 .. 1e-12, probed in the variable u = 1/eps.
GrowthProbe endpoint_probe(const std::function<double(double)>& f, double t_ref,
                           double tol);

/// Growth classification of a non-decreasing partial-integral sequence
/// observed at strictly increasing abscissas xs:
///   - increments vanished            -> Yes
///   - geometric decay, bounded tail  -> Yes
///   - log-model slope  > 10*tol      -> No
///   - growing increments             -> No
///   - otherwise                      -> Inconclusive
ProbeVerdict decide_growth(const std::vector<double>& partials,
                           const std::vector<double>& xs, double tol);

ProbeVerdict combine_verdicts(ProbeVerdict a, ProbeVerdict b);

}  // namespace kk::detail
