#include "kk/transforms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kk/detail/growth_probe.hpp"

namespace kk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Upper bound on the integral of e^{-s't}|f(t)| over [T, inf).
double tail_bound(const Envelope& env, double s_prime, double T) {
    switch (env.kind) {
        case Envelope::Kind::CompactSupport:
            return T >= env.t_end ? 0.0 : kInf;
        case Envelope::Kind::Exponential: {
            double r = s_prime + env.rate;
            if (r <= 0.0) return kInf;
            return env.scale * std::exp(-r * T) / r;
        }
        case Envelope::Kind::PowerLaw: {
            double Teff = std::max(T, env.t_from);
            if (s_prime > 0.0)
                return env.scale * std::exp(-s_prime * Teff) /
                       (s_prime * std::pow(Teff, env.exponent));
            if (env.exponent > 1.0)
                return env.scale * std::pow(Teff, 1.0 - env.exponent) /
                       (env.exponent - 1.0);
            return kInf;
        }
        case Envelope::Kind::Constant:
            if (s_prime <= 0.0) return kInf;
            return env.scale * std::exp(-s_prime * T) / s_prime;
    }
    return kInf;
}

// Smallest T with tail_bound < tol, or +inf when none exists.
double truncation_point(const Envelope& env, double s_prime, double tol) {
    switch (env.kind) {
        case Envelope::Kind::CompactSupport:
            return env.t_end;
        case Envelope::Kind::Exponential: {
            double r = s_prime + env.rate;
            if (r <= 0.0) return kInf;
            return std::max(0.0, std::log(env.scale / (tol * r)) / r);
        }
        case Envelope::Kind::PowerLaw:
        case Envelope::Kind::Constant: {
            if (s_prime > 0.0) {
                double T = std::max(env.t_from, 1.0);
                for (int i = 0; i < 64 && tail_bound(env, s_prime, T) >= tol; ++i)
                    T *= 2.0;
                return tail_bound(env, s_prime, T) < tol ? T : kInf;
            }
            if (env.kind == Envelope::Kind::PowerLaw && env.exponent > 1.0) {
                double T = std::pow(env.scale / (tol * (env.exponent - 1.0)),
                                    1.0 / (env.exponent - 1.0));
                return std::max(T, env.t_from);
            }
            return kInf;
        }
    }
    return kInf;
}

quadrature::Estimate integrate_transform(const CausalSignal& signal, Complex s,
                                         double t_lo, double t_hi,
                                         const quadrature::Config& cfg) {
    auto f = [&](double t) { return std::exp(-s * t) * signal.time_fn(t); };
    quadrature::Estimate total;
    double lo = t_lo;
    if (signal.singular_at_zero && t_lo < 1.0) {
        double cut = std::min(1.0, t_hi);
        total += quadrature::integrate_graded_left(f, t_lo, cut, cfg);
        lo = cut;
    }
    if (t_hi > lo) {
        double osc = std::abs(s.imag());
        if (osc * (t_hi - lo) > 100.0)
            total += quadrature::integrate_oscillatory(f, lo, t_hi, osc, cfg);
        else
            total += quadrature::integrate(f, lo, t_hi, cfg);
    }
    return total;
}

}  // namespace

Complex laplace_transform(const CausalSignal& signal, ComplexPoint s,
                          const quadrature::Config& cfg) {
    cfg.validate();
    if (!std::isfinite(s.s_prime) || !std::isfinite(s.s_double_prime))
        throw std::invalid_argument("laplace_transform: s must be finite");
    if (!signal.causal)
        throw std::invalid_argument(
            "laplace_transform: signal must be causal");
    if (signal.lambda0 && !(s.s_prime > *signal.lambda0))
        throw std::domain_error(
            "laplace_transform: point left of the convergence abscissa");

    const Complex sc = s.to_complex();
    double T = cfg.truncation_time.value_or(
        truncation_point(signal.envelope, s.s_prime, 0.1 * cfg.abs_tol));
    if (!std::isfinite(T)) {
        // Purely oscillatory tail: sum half-period panels under acceleration.
        if (s.s_prime == 0.0 && s.s_double_prime != 0.0 &&
            signal.envelope.kind == Envelope::Kind::PowerLaw) {
            double t0 = std::max(1.0, signal.envelope.t_from);
            auto f = [&](double t) {
                return std::exp(-sc * t) * signal.time_fn(t);
            };
            quadrature::Estimate head =
                integrate_transform(signal, sc, 0.0, t0, cfg);
            quadrature::Estimate tail = quadrature::integrate_oscillatory_tail(
                f, t0, s.s_double_prime, cfg);
            return head.value + tail.value;
        }
        throw std::domain_error(
            "laplace_transform: integral does not converge at this point");
    }
    quadrature::Estimate est = integrate_transform(signal, sc, 0.0, T, cfg);
    est.error += tail_bound(signal.envelope, s.s_prime, T);
    return est.value;
}

LambdaEstimate estimate_lambda0(const CausalSignal& signal,
                                std::pair<double, double> bracket,
                                const quadrature::Config& cfg) {
    cfg.validate();
    auto [lo, hi] = bracket;
    if (!(lo < hi))
        throw std::invalid_argument("estimate_lambda0: bracket low must be < high");

    auto converges = [&](double s_prime) {
        auto weighted = [&, s_prime](double t) {
            double e = -s_prime * t;
            if (e > 690.0) return detail::kGrowthCap;  // exp would overflow
            return std::exp(e) * std::abs(evaluate(signal, t));
        };
        double t_start = signal.singular_at_zero ? detail::kEndpointFloor : 0.0;
        detail::GrowthProbe p = detail::probed_partial_integrals(
            weighted, t_start, default_integrability_schedule(),
            kDefaultIntegrabilityTol, true);
        return p.verdict == ProbeVerdict::Yes;
    };

    if (!converges(hi))
        throw std::domain_error(
            "estimate_lambda0: divergence at the high end of the bracket");
    if (converges(lo)) return {lo, true};

    while (hi - lo > 1e-3) {
        double mid = 0.5 * (lo + hi);
        if (converges(mid))
            hi = mid;
        else
            lo = mid;
    }
    return {0.5 * (lo + hi), false};
}

std::vector<double> riemann_lebesgue_probe(
    const CausalSignal& signal, double s_double_prime,
    const std::vector<double>& s_prime_sequence,
    const quadrature::Config& cfg) {
    for (std::size_t i = 1; i < s_prime_sequence.size(); ++i)
        if (!(s_prime_sequence[i] > s_prime_sequence[i - 1]))
            throw std::invalid_argument(
                "riemann_lebesgue_probe: sequence must be increasing");
    std::vector<double> out;
    out.reserve(s_prime_sequence.size());
    for (double sp : s_prime_sequence)
        out.push_back(
            std::abs(laplace_transform(signal, {sp, s_double_prime}, cfg)));
    return out;
}

Complex fourier_transform(const CausalSignal& signal, double omega,
                          const quadrature::Config& cfg) {
    if (signal.l1_membership != Membership::Yes)
        throw std::domain_error(
            "fourier_transform: signal is not L1; the Laplace identity at "
            "s = -i*omega is not available (use truncated_fourier_sequence)");
    return laplace_transform(signal, {0.0, -omega}, cfg);
}

std::vector<Complex> truncated_fourier_sequence(const CausalSignal& signal,
                                                const std::vector<int>& n_values,
                                                double omega,
                                                const quadrature::Config& cfg) {
    cfg.validate();
    if (n_values.empty())
        throw std::invalid_argument("truncated_fourier_sequence: empty n list");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] <= 0)
            throw std::invalid_argument(
                "truncated_fourier_sequence: n values must be positive");
        if (i > 0 && n_values[i] <= n_values[i - 1])
            throw std::invalid_argument(
                "truncated_fourier_sequence: n values must be strictly "
                "increasing");
    }
    const Complex sc(0.0, -omega);
    std::vector<Complex> out;
    Complex acc{0.0, 0.0};
    double lo = 0.0;
    for (int n : n_values) {
        acc += integrate_transform(signal, sc, lo, static_cast<double>(n), cfg)
                   .value;
        lo = static_cast<double>(n);
        out.push_back(acc);
    }
    return out;
}

BromwichResult bromwich_inverse(const LaplaceFn& transform, double lambda0,
                                double t, double a, double cutoff,
                                const quadrature::Config& cfg) {
    cfg.validate();
    if (!(a > lambda0))
        throw std::domain_error("bromwich_inverse: need a > lambda0");
    if (!(cutoff > 0.0))
        throw std::invalid_argument("bromwich_inverse: cutoff must be > 0");

    auto f = [&](double y) {
        Complex s(a, y);
        return transform(s) * std::exp(s * t);
    };
    quadrature::Estimate est =
        quadrature::integrate_oscillatory(f, -cutoff, cutoff, t, cfg);

    BromwichResult out;
    out.value = est.value.real() / (2.0 * M_PI);
    out.quadrature_error = est.error / (2.0 * M_PI);
    double edge = std::abs(transform(Complex(a, cutoff))) +
                  std::abs(transform(Complex(a, -cutoff)));
    double t_eff = std::max(std::abs(t), 1.0 / cutoff);
    out.truncation_error = std::exp(a * t) * edge / (2.0 * M_PI * t_eff);
    return out;
}

}  // namespace kk
