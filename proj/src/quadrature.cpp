#include "kk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace kk::quadrature {

namespace {

// 15-point Kronrod nodes on [-1,1] with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelResult {
    Complex value;
    double error;
};

PanelResult gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex fc = f(c);
    Complex resk = kWgk[7] * fc;
    Complex resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        Complex f1 = f(c - x);
        Complex f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    Complex value = resk * h;
    double err = std::abs(resk - resg) * std::abs(h);
    // QUADPACK-style sharpening of the raw |K15-G7| estimate.
    resabs *= std::abs(h);
    if (resabs > 0.0 && err > 0.0) {
        double scaled = std::pow(200.0 * err / resabs, 1.5);
        err = resabs * std::min(1.0, scaled);
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw std::runtime_error("quadrature: non-finite integrand value");
    return {value, err};
}

struct Panel {
    double a, b;
    Complex value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Estimate adapt(const Integrand& f, std::vector<Panel> seed, const Config& cfg) {
    std::priority_queue<Panel> heap(std::less<Panel>(), std::move(seed));
    Complex total{0, 0};
    double total_err = 0;
    std::size_t evals = 0;
    {
        // totals over the seed panels
        std::priority_queue<Panel> copy = heap;
        while (!copy.empty()) {
            total += copy.top().value;
            total_err += copy.top().error;
            copy.pop();
        }
    }
    int splits = 0;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (splits++ >= cfg.max_subdivisions)
            throw std::runtime_error(
                "quadrature: no convergence within max_subdivisions");
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw std::runtime_error(
                "quadrature: interval collapsed below machine resolution");
        PanelResult left = gk15(f, worst.a, mid);
        PanelResult right = gk15(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push({worst.a, mid, left.value, left.error});
        heap.push({mid, worst.b, right.value, right.error});
    }
    return {total, total_err, evals};
}

}  // namespace

void Config::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("quadrature config: tolerances must be > 0");
    if (max_subdivisions < 1)
        throw std::invalid_argument(
            "quadrature config: max_subdivisions must be >= 1");
}

Estimate integrate(const Integrand& f, double a, double b, const Config& cfg) {
    cfg.validate();
    if (a == b) return {};
    PanelResult first = gk15(f, a, b);
    return adapt(f, {{a, b, first.value, first.error}}, cfg);
}

Estimate integrate_graded_left(const Integrand& f, double a, double b,
                               const Config& cfg) {
    cfg.validate();
    if (!(b > a)) throw std::invalid_argument("integrate_graded_left: b <= a");
    // Dyadic panels toward the singular endpoint; the innermost sliver is
    // dropped once its crude bound |f(left)| * width is negligible.
    const double span = b - a;
    std::vector<Panel> seed;
    double hi = b;
    Estimate acc;
    for (int k = 1; k <= 160; ++k) {
        double lo = a + span * std::ldexp(1.0, -k);
        PanelResult r = gk15(f, lo, hi);
        seed.push_back({lo, hi, r.value, r.error});
        hi = lo;
        double sliver = std::abs(f(a + 0.5 * (hi - a))) * (hi - a);
        if (!std::isfinite(sliver))
            continue;  // still inside the singular region, keep grading
        if (sliver < 0.01 * cfg.abs_tol) {
            acc.error += sliver;
            break;
        }
    }
    Estimate body = adapt(f, std::move(seed), cfg);
    body.error += acc.error;
    return body;
}

Estimate integrate_oscillatory(const Integrand& f, double a, double b,
                               double omega, const Config& cfg) {
    cfg.validate();
    const double w = std::abs(omega);
    if (!(b > a)) throw std::invalid_argument("integrate_oscillatory: b <= a");
    if (w * (b - a) < 100.0) return integrate(f, a, b, cfg);
    const double half_period = M_PI / w;
    const std::size_t n = static_cast<std::size_t>((b - a) / half_period) + 1;
    Config panel_cfg = cfg;
    panel_cfg.abs_tol = std::max(cfg.abs_tol / static_cast<double>(n), 1e-14);
    panel_cfg.rel_tol = std::max(cfg.rel_tol, 1e-12);
    panel_cfg.max_subdivisions = 64;
    Estimate total;
    // Kahan summation: many nearly-cancelling panels.
    Complex comp{0, 0};
    Complex sum{0, 0};
    double lo = a;
    while (lo < b) {
        double hi = std::min(lo + half_period, b);
        Estimate p = integrate(f, lo, hi, panel_cfg);
        Complex y = p.value - comp;
        Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        total.error += p.error;
        total.evaluations += p.evaluations + 15;
        lo = hi;
    }
    total.value = sum;
    return total;
}

Estimate integrate_oscillatory_tail(const Integrand& f, double a, double omega,
                                    const Config& cfg) {
    cfg.validate();
    const double w = std::abs(omega);
    if (!(w > 0.0))
        throw std::invalid_argument(
            "integrate_oscillatory_tail: zero oscillation frequency");
    const double half_period = M_PI / w;
    Config panel_cfg = cfg;
    panel_cfg.abs_tol = std::max(cfg.abs_tol * 1e-2, 1e-14);
    panel_cfg.rel_tol = std::max(cfg.rel_tol, 1e-12);
    panel_cfg.max_subdivisions = 64;

    // Iterated Aitken delta-squared on the sequence of half-period partial sums.
    auto aitken = [](std::vector<Complex> s) {
        while (s.size() >= 3) {
            std::vector<Complex> next;
            next.reserve(s.size() - 2);
            for (std::size_t i = 0; i + 2 < s.size(); ++i) {
                Complex d2 = s[i + 2] - 2.0 * s[i + 1] + s[i];
                if (std::abs(d2) < 1e-300)
                    next.push_back(s[i + 2]);
                else
                    next.push_back(s[i + 2] - (s[i + 2] - s[i + 1]) *
                                                  (s[i + 2] - s[i + 1]) / d2);
            }
            if (next.size() < 3) return next.empty() ? s.back() : next.back();
            s = std::move(next);
        }
        return s.back();
    };

    std::vector<Complex> partial;
    Complex running{0, 0};
    Estimate total;
    double lo = a;
    Complex extrapolated{0, 0};
    Complex prev_extrapolated{0, 0};
    const std::size_t max_panels = 4000;
    for (std::size_t k = 0; k < max_panels; ++k) {
        Estimate p = integrate(f, lo, lo + half_period, panel_cfg);
        total.error += p.error;
        total.evaluations += p.evaluations + 15;
        running += p.value;
        partial.push_back(running);
        lo += half_period;
        if (partial.size() >= 6 && partial.size() % 2 == 0) {
            std::size_t tail_len = std::min<std::size_t>(partial.size(), 24);
            std::vector<Complex> window(partial.end() - tail_len, partial.end());
            prev_extrapolated = extrapolated;
            extrapolated = aitken(std::move(window));
            double delta = std::abs(extrapolated - prev_extrapolated);
            if (partial.size() >= 10 && delta < std::max(cfg.abs_tol, 1e-14)) {
                total.value = extrapolated;
                total.error += delta;
                return total;
            }
        }
    }
    throw std::runtime_error(
        "quadrature: oscillatory tail failed to converge under acceleration");
}

}  // namespace kk::quadrature
