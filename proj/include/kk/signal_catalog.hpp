#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kk/types.hpp"

namespace kk {

enum class Membership { Yes, No, Unknown };
enum class ProbeVerdict { Yes, No, Inconclusive };

const char* to_string(Membership m);
const char* to_string(ProbeVerdict v);

/// Decay bound on |f(t)| used to truncate semi-infinite integrals.
struct Envelope {
    enum class Kind { CompactSupport, Exponential, PowerLaw, Constant };
    Kind kind = Kind::Constant;
    double scale = 1.0;     // C in |f| <= C * shape(t)
    double rate = 0.0;      // beta for Exponential
    double exponent = 0.0;  // p for PowerLaw (|f| <= C/t^p past t_from)
    double t_from = 0.0;
    double t_end = 0.0;     // CompactSupport only
};

/// A named time-domain signal with ground-truth metadata.
struct CausalSignal {
    std::string id;
    std::function<double(double)> time_fn;  // raw evaluator, no causality gate
    bool causal = true;
    Membership l1_membership = Membership::Unknown;
    Membership l2_membership = Membership::Unknown;
    std::optional<double> lambda0;  // -inf means entire transform
    std::function<Complex(Complex)> closed_form_laplace;  // may be empty
    std::function<Complex(double)> closed_form_fourier;   // may be empty
    std::map<std::string, double> parameters;

    Envelope envelope;
    bool singular_at_zero = false;   // integrable endpoint singularity at t=0
    double spectral_decay_order = 0; // |F(w)| ~ 1/|w|^order as |w| -> inf
};

struct IntegrabilityVerdict {
    ProbeVerdict l1 = ProbeVerdict::Inconclusive;
    ProbeVerdict l2 = ProbeVerdict::Inconclusive;
    double l1_partial_integral = 0.0;
    double l2_partial_integral = 0.0;
    double t_max_probed = 0.0;
};

/// Registered catalog ids, in registration order.
std::vector<std::string> catalog_ids();

/// Instantiates a catalog signal. Unknown parameters, out-of-range values and
/// unknown ids throw std::invalid_argument.
CausalSignal catalog_get(const std::string& id,
                         const std::map<std::string, double>& parameters = {});

/// Amplitude at time t; exactly 0 for t < 0 when the signal is causal.
double evaluate(const CausalSignal& signal, double t);

inline std::vector<double> default_integrability_schedule() {
    return {10.0, 1e2, 1e3, 1e4, 1e5, 1e6};
}
constexpr double kDefaultIntegrabilityTol = 1e-6;

/// Probes the partial integrals of |f| and |f|^2 over [0, T] along the
/// schedule (plus an endpoint-refinement sweep for signals with a declared
/// t=0 singularity) and classifies each as convergent, divergent against a
/// fitted log/power growth model, or inconclusive.
IntegrabilityVerdict classify_integrability(
    const CausalSignal& signal,
    const std::vector<double>& schedule = default_integrability_schedule(),
    double tol = kDefaultIntegrabilityTol);

}  // namespace kk
