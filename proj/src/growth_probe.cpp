#include "kk/detail/growth_probe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kk/quadrature.hpp"

namespace kk::detail {

namespace {

quadrature::Config probe_quadrature_config() {
    quadrature::Config cfg;
    cfg.abs_tol = 1e-10;
    cfg.rel_tol = 1e-10;
    cfg.max_subdivisions = 4000;
    return cfg;
}

// Geometric sub-panels of [a, b] so overflow is caught early instead of
// poisoning one huge adaptive call.
std::vector<double> sub_points(double a, double b) {
    std::vector<double> pts;
    pts.push_back(a);
    double lo = a;
    if (lo <= 0.0) {
        double first = std::min(1e-3, b);
        if (first > lo) {
            pts.push_back(first);
            lo = first;
        }
    }
    const int steps = 8;
    for (int i = 1; i <= steps; ++i) {
        double x = lo * std::pow(b / lo, static_cast<double>(i) / steps);
        if (x > pts.back() * (1 + 1e-12) && x < b) pts.push_back(x);
    }
    pts.push_back(b);
    return pts;
}

}  // namespace

ProbeVerdict combine_verdicts(ProbeVerdict a, ProbeVerdict b) {
    if (a == ProbeVerdict::No || b == ProbeVerdict::No) return ProbeVerdict::No;
    if (a == ProbeVerdict::Inconclusive || b == ProbeVerdict::Inconclusive)
        return ProbeVerdict::Inconclusive;
    return ProbeVerdict::Yes;
}

ProbeVerdict decide_growth(const std::vector<double>& partials,
                           const std::vector<double>& xs, double tol) {
    const std::size_t n = partials.size();
    if (n < 2) return ProbeVerdict::Inconclusive;
    const double noise = 1e-13 * std::max(1.0, std::abs(partials.back()));

    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        d[i] = std::max(partials[i + 1] - partials[i], 0.0);

    if (d.back() <= noise) return ProbeVerdict::Yes;

    // Geometric decay of increments with a bounded projected tail.
    std::vector<double> ratios;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i] > noise && d[i + 1] > noise) ratios.push_back(d[i + 1] / d[i]);
    if (!ratios.empty()) {
        std::size_t take = std::min<std::size_t>(3, ratios.size());
        double rmax = 0.0, rmin = 1e300;
        for (std::size_t i = ratios.size() - take; i < ratios.size(); ++i) {
            rmax = std::max(rmax, ratios[i]);
            rmin = std::min(rmin, ratios[i]);
        }
        if (rmax < 0.9) {
            double tail = d.back() * rmax / (1.0 - rmax);
            return tail < 10.0 * tol ? ProbeVerdict::Yes
                                     : ProbeVerdict::Inconclusive;
        }
        if (rmin > 1.1 && d.back() > 10.0 * tol) return ProbeVerdict::No;
    }

    // Logarithmic model I ~ a + b*log(x) over the last 5 points.
    std::size_t m = std::min<std::size_t>(5, n);
    double sx = 0, sy = 0;
    for (std::size_t i = n - m; i < n; ++i) {
        sx += std::log(xs[i]);
        sy += partials[i];
    }
    sx /= m;
    sy /= m;
    double cov = 0, var = 0;
    for (std::size_t i = n - m; i < n; ++i) {
        double dx = std::log(xs[i]) - sx;
        cov += dx * (partials[i] - sy);
        var += dx * dx;
    }
    if (var > 0 && cov / var > 10.0 * tol) return ProbeVerdict::No;

    return ProbeVerdict::Inconclusive;
}

GrowthProbe probed_partial_integrals(const std::function<double(double)>& f,
                                     double x0,
                                     const std::vector<double>& schedule,
                                     double tol,
                                     bool treat_nonfinite_as_divergent) {
    quadrature::Config cfg = probe_quadrature_config();
    GrowthProbe out;
    double acc = 0.0;
    double lo = x0;
    for (double target : schedule) {
        if (target <= lo) {
            out.partials.push_back(acc);
            continue;
        }
        for (auto pts = sub_points(lo, target); pts.size() >= 2;) {
            bool diverged = false;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                double v;
                try {
                    v = quadrature::integrate(
                            [&](double t) {
                                return quadrature::Complex(f(t), 0.0);
                            },
                            pts[i], pts[i + 1], cfg)
                            .value.real();
                } catch (const std::runtime_error&) {
                    if (!treat_nonfinite_as_divergent) throw;
                    v = kGrowthCap;
                }
                if (!std::isfinite(v)) {
                    if (!treat_nonfinite_as_divergent)
                        throw std::runtime_error(
                            "classify: non-finite integrand away from declared "
                            "singularities");
                    v = kGrowthCap;
                }
                acc += std::max(v, 0.0);
                if (acc >= kGrowthCap) {
                    diverged = true;
                    break;
                }
            }
            if (diverged) {
                out.verdict = ProbeVerdict::No;
                out.final_partial = acc;
                out.x_max = target;
                return out;
            }
            break;
        }
        lo = target;
        out.partials.push_back(acc);
    }
    std::vector<double> xs(schedule.begin(),
                           schedule.begin() + out.partials.size());
    out.verdict = decide_growth(out.partials, xs, tol);
    out.final_partial = acc;
    out.x_max = schedule.back();
    return out;
}

GrowthProbe endpoint_probe(const std::function<double(double)>& f, double t_ref,
                           double tol) {
    quadrature::Config cfg = probe_quadrature_config();
    GrowthProbe out;
    std::vector<double> us;
    double acc = 0.0;
    double hi = t_ref;
    for (int k = 1; k <= 12; ++k) {
        double eps = std::pow(10.0, -k);
        if (eps >= hi) continue;
        double v = quadrature::integrate(
                       [&](double t) { return quadrature::Complex(f(t), 0.0); },
                       eps, hi, cfg)
                       .value.real();
        if (!std::isfinite(v) || acc + v >= kGrowthCap) {
            out.verdict = ProbeVerdict::No;
            out.final_partial = kGrowthCap;
            return out;
        }
        acc += std::max(v, 0.0);
        out.partials.push_back(acc);
        us.push_back(1.0 / eps);
        hi = eps;
    }
    out.verdict = decide_growth(out.partials, us, tol);
    out.final_partial = acc;
    out.x_max = us.empty() ? 0.0 : us.back();
    return out;
}

}  // namespace kk::detail
