#include "kk/signal_catalog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kk/detail/growth_probe.hpp"
#include "kk/quadrature.hpp"

namespace kk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrtClamp = 1e-300;  // evaluate(inv-sqrt-pulse, 0) uses t=1e-300

void require_no_params(const std::string& id,
                       const std::map<std::string, double>& p) {
    if (!p.empty())
        throw std::invalid_argument("signal '" + id + "' takes no parameters");
}

double get_param(const std::map<std::string, double>& p, const std::string& key,
                 double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

void check_param_names(const std::string& id,
                       const std::map<std::string, double>& p,
                       std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : p) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || (k == a);
        if (!ok)
            throw std::invalid_argument("signal '" + id +
                                        "': unknown parameter '" + k + "'");
    }
}

CausalSignal make_exp_decay(const std::map<std::string, double>& p) {
    check_param_names("exp-decay", p, {"alpha"});
    const double alpha = get_param(p, "alpha", 1.0);
    if (!(alpha > 0.0))
        throw std::invalid_argument("exp-decay: alpha must be > 0");
    CausalSignal s;
    s.id = "exp-decay";
    s.time_fn = [alpha](double t) { return std::exp(-alpha * t); };
    s.l1_membership = Membership::Yes;
    s.l2_membership = Membership::Yes;
    s.lambda0 = -alpha;
    s.closed_form_laplace = [alpha](Complex z) { return 1.0 / (z + alpha); };
    s.closed_form_fourier = [alpha](double w) {
        return 1.0 / Complex(alpha, -w);
    };
    s.parameters = {{"alpha", alpha}};
    s.envelope = {Envelope::Kind::Exponential, 1.0, alpha, 0.0, 0.0, 0.0};
    s.spectral_decay_order = 1.0;
    return s;
}

CausalSignal make_damped_oscillator(const std::map<std::string, double>& p) {
    check_param_names("damped-oscillator", p, {"alpha", "omega0"});
    const double alpha = get_param(p, "alpha", 1.0);
    const double omega0 = get_param(p, "omega0", 2.0);
    if (!(alpha > 0.0))
        throw std::invalid_argument("damped-oscillator: alpha must be > 0");
    if (!(omega0 > 0.0))
        throw std::invalid_argument("damped-oscillator: omega0 must be > 0");
    CausalSignal s;
    s.id = "damped-oscillator";
    s.time_fn = [alpha, omega0](double t) {
        return std::exp(-alpha * t) * std::sin(omega0 * t);
    };
    s.l1_membership = Membership::Yes;
    s.l2_membership = Membership::Yes;
    s.lambda0 = -alpha;
    s.closed_form_laplace = [alpha, omega0](Complex z) {
        Complex za = z + alpha;
        return omega0 / (za * za + omega0 * omega0);
    };
    s.closed_form_fourier = [alpha, omega0](double w) {
        Complex za(alpha, -w);
        return omega0 / (za * za + omega0 * omega0);
    };
    s.parameters = {{"alpha", alpha}, {"omega0", omega0}};
    s.envelope = {Envelope::Kind::Exponential, 1.0, alpha, 0.0, 0.0, 0.0};
    s.spectral_decay_order = 2.0;
    return s;
}

CausalSignal make_rect_pulse(const std::map<std::string, double>& p) {
    require_no_params("rect-pulse", p);
    CausalSignal s;
    s.id = "rect-pulse";
    s.time_fn = [](double t) { return t <= 1.0 ? 1.0 : 0.0; };
    s.l1_membership = Membership::Yes;
    s.l2_membership = Membership::Yes;
    s.lambda0 = -kInf;  // compact support: entire transform
    s.closed_form_laplace = [](Complex z) {
        if (std::abs(z) < 1e-8)
            return 1.0 - z / 2.0 + z * z / 6.0;
        return (1.0 - std::exp(-z)) / z;
    };
    s.closed_form_fourier = [](double w) {
        Complex iw(0.0, w);
        if (std::abs(w) < 1e-8)
            return 1.0 + iw / 2.0 - (w * w) / 6.0;
        return (std::exp(iw) - 1.0) / iw;
    };
    s.envelope = {Envelope::Kind::CompactSupport, 1.0, 0.0, 0.0, 0.0, 1.0};
    s.spectral_decay_order = 1.0;
    return s;
}

CausalSignal make_inv_t_tail(const std::map<std::string, double>& p) {
    require_no_params("inv-t-tail", p);
    CausalSignal s;
    s.id = "inv-t-tail";
    s.time_fn = [](double t) { return t < 1.0 ? 0.0 : 1.0 / t; };
    s.l1_membership = Membership::No;
    s.l2_membership = Membership::Yes;
    s.lambda0 = 0.0;
    s.envelope = {Envelope::Kind::PowerLaw, 1.0, 0.0, 1.0, 1.0, 0.0};
    return s;
}

CausalSignal make_inv_sqrt_pulse(const std::map<std::string, double>& p) {
    require_no_params("inv-sqrt-pulse", p);
    CausalSignal s;
    s.id = "inv-sqrt-pulse";
    s.time_fn = [](double t) {
        if (t > 1.0) return 0.0;
        return 1.0 / std::sqrt(std::max(t, kSqrtClamp));
    };
    s.l1_membership = Membership::Yes;
    s.l2_membership = Membership::No;
    s.lambda0 = -kInf;
    s.envelope = {Envelope::Kind::CompactSupport, 1.0, 0.0, 0.0, 0.0, 1.0};
    s.singular_at_zero = true;
    s.spectral_decay_order = 0.5;
    return s;
}

CausalSignal make_heaviside(const std::map<std::string, double>& p) {
    require_no_params("heaviside", p);
    CausalSignal s;
    s.id = "heaviside";
    s.time_fn = [](double) { return 1.0; };
    s.l1_membership = Membership::No;
    s.l2_membership = Membership::No;
    s.lambda0 = 0.0;
    s.closed_form_laplace = [](Complex z) { return 1.0 / z; };  // Re z > 0
    s.envelope = {Envelope::Kind::Constant, 1.0, 0.0, 0.0, 0.0, 0.0};
    return s;
}

CausalSignal make_constant(const std::map<std::string, double>& p) {
    require_no_params("constant", p);
    CausalSignal s;
    s.id = "constant";
    s.time_fn = [](double) { return 1.0; };
    s.causal = false;
    s.l1_membership = Membership::No;
    s.l2_membership = Membership::No;
    s.envelope = {Envelope::Kind::Constant, 1.0, 0.0, 0.0, 0.0, 0.0};
    return s;
}

CausalSignal make_sign(const std::map<std::string, double>& p) {
    require_no_params("sign", p);
    CausalSignal s;
    s.id = "sign";
    s.time_fn = [](double t) { return t < 0.0 ? -1.0 : 1.0; };
    s.causal = false;
    s.l1_membership = Membership::No;
    s.l2_membership = Membership::No;
    s.envelope = {Envelope::Kind::Constant, 1.0, 0.0, 0.0, 0.0, 0.0};
    return s;
}

}  // namespace

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Yes: return "Yes";
        case Membership::No: return "No";
        default: return "Unknown";
    }
}

const char* to_string(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::Yes: return "Yes";
        case ProbeVerdict::No: return "No";
        default: return "Inconclusive";
    }
}

std::vector<std::string> catalog_ids() {
    return {"exp-decay",      "damped-oscillator", "rect-pulse",
            "inv-t-tail",     "inv-sqrt-pulse",    "heaviside",
            "constant",       "sign"};
}

CausalSignal catalog_get(const std::string& id,
                         const std::map<std::string, double>& parameters) {
    if (id == "exp-decay") return make_exp_decay(parameters);
    if (id == "damped-oscillator") return make_damped_oscillator(parameters);
    if (id == "rect-pulse") return make_rect_pulse(parameters);
    if (id == "inv-t-tail") return make_inv_t_tail(parameters);
    if (id == "inv-sqrt-pulse") return make_inv_sqrt_pulse(parameters);
    if (id == "heaviside") return make_heaviside(parameters);
    if (id == "constant") return make_constant(parameters);
    if (id == "sign") return make_sign(parameters);
    throw std::invalid_argument("unknown catalog id '" + id + "'");
}

double evaluate(const CausalSignal& signal, double t) {
    if (!std::isfinite(t))
        throw std::invalid_argument("evaluate: t must be finite");
    if (signal.causal && t < 0.0) return 0.0;
    return signal.time_fn(t);
}

IntegrabilityVerdict classify_integrability(const CausalSignal& signal,
                                            const std::vector<double>& schedule,
                                            double tol) {
    if (schedule.empty())
        throw std::invalid_argument("classify: schedule must be non-empty");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (!(schedule[i] > schedule[i - 1]))
            throw std::invalid_argument(
                "classify: schedule must be strictly increasing");
    if (!(tol > 0.0)) throw std::invalid_argument("classify: tol must be > 0");

    auto abs_f = [&](double t) { return std::abs(evaluate(signal, t)); };
    auto sq_f = [&](double t) {
        double v = evaluate(signal, t);
        return v * v;
    };

    const double t_start = signal.singular_at_zero ? detail::kEndpointFloor : 0.0;

    detail::GrowthProbe p1 =
        detail::probed_partial_integrals(abs_f, t_start, schedule, tol, false);
    detail::GrowthProbe p2 =
        detail::probed_partial_integrals(sq_f, t_start, schedule, tol, false);

    ProbeVerdict l1 = p1.verdict;
    ProbeVerdict l2 = p2.verdict;

    if (signal.singular_at_zero) {
        // Refine toward the singular endpoint: partial integrals over
        // [eps, t_ref] probed in u = 1/eps with the same growth models.
        const double t_ref = std::min(
            schedule.front(), signal.envelope.kind == Envelope::Kind::CompactSupport
                                  ? signal.envelope.t_end
                                  : schedule.front());
        l1 = detail::combine_verdicts(
            l1, detail::endpoint_probe(abs_f, t_ref, tol).verdict);
        l2 = detail::combine_verdicts(
            l2, detail::endpoint_probe(sq_f, t_ref, tol).verdict);
    }

    IntegrabilityVerdict out;
    out.l1 = l1;
    out.l2 = l2;
    out.l1_partial_integral = p1.final_partial;
    out.l2_partial_integral = p2.final_partial;
    out.t_max_probed = schedule.back();
    return out;
}

}  // namespace kk
