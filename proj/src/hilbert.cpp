#include "kk/hilbert.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "kk/interp.hpp"
#include "kk/transforms.hpp"

namespace kk {

namespace {

// --- tail model -----------------------------------------------------------

struct TailFit {
    double c_left = 0.0;
    double c_right = 0.0;
    double edge_magnitude = 0.0;  // mean |g| over the fit bands
};

// Least-squares fit of g ~ c/nu over the outermost 5% of each side.
TailFit fit_tail(const std::function<double(double)>& g, double a, double b) {
    const double w = 0.05 * (b - a);
    const int n = 64;
    auto fit_band = [&](double lo, double hi, double& edge_mag) {
        double num = 0.0, den = 0.0, mag = 0.0;
        for (int i = 0; i < n; ++i) {
            double nu = lo + (hi - lo) * (i + 0.5) / n;
            double gv = g(nu);
            num += gv / nu;
            den += 1.0 / (nu * nu);
            mag += std::abs(gv);
        }
        edge_mag = mag / n;
        return num / den;
    };
    TailFit f;
    double ml = 0.0, mr = 0.0;
    f.c_left = fit_band(a, a + w, ml);
    f.c_right = fit_band(b - w, b, mr);
    f.edge_magnitude = std::max(ml, mr);
    return f;
}

// Same fit over the outermost 5% of the actual samples.
TailFit fit_tail_samples(std::span<const double> samples,
                         const FrequencyGrid& grid) {
    const int n = grid.n_points;
    const int band = std::max(4, n / 20);
    auto fit_band = [&](int lo, int hi, double& edge_mag) {
        double num = 0.0, den = 0.0, mag = 0.0;
        for (int i = lo; i < hi; ++i) {
            double nu = grid.point(i);
            num += samples[i] / nu;
            den += 1.0 / (nu * nu);
            mag += std::abs(samples[i]);
        }
        edge_mag = mag / (hi - lo);
        return num / den;
    };
    TailFit f;
    double ml = 0.0, mr = 0.0;
    f.c_left = fit_band(0, band, ml);
    f.c_right = fit_band(n - band, n, mr);
    f.edge_magnitude = std::max(ml, mr);
    return f;
}

// P-integral of the c/nu model over (-inf, a] u [b, inf) against 1/(nu-omega).
double tail_pv(const TailFit& f, double a, double b, double omega) {
    if (!(a < 0.0 && b > 0.0))
        throw std::invalid_argument(
            "rational tail model requires a grid spanning omega = 0");
    const double span = b - a;
    if (std::abs(omega) < 1e-9 * span) {
        return f.c_right * (1.0 / b + omega / (2.0 * b * b)) +
               f.c_left * (-1.0 / a - omega / (2.0 * a * a));
    }
    return f.c_right * std::log1p(omega / (b - omega)) / omega +
           f.c_left * std::log1p(-omega / a) / omega;
}

// --- PV engine -------------------------------------------------------------

double pv_engine(const std::function<double(double)>& g,
                 const std::function<double(double)>& g_deriv, double a,
                 double b, double omega, const TailModel& tail,
                 const quadrature::Config& cfg, const PvOptions& opts,
                 const TailFit& fit, double scale) {
    if (!(omega > a && omega < b))
        throw std::invalid_argument("pv_hilbert: omega must lie strictly "
                                    "inside the grid span");
    if (tail.kind == TailModel::Kind::None && opts.require_tail_coverage &&
        fit.edge_magnitude > 1e-3 * scale)
        throw std::runtime_error(
            "pv_hilbert: no tail model, but the spectrum carries significant "
            "mass at the grid edge; the truncated principal value would be "
            "biased");
    if (tail.kind == TailModel::Kind::Rational && tail.order != 1)
        throw std::invalid_argument("pv_hilbert: only Rational(1) implemented");

    const double gw = g(omega);
    const double guard = 1e-9 * (b - a);
    auto subtracted = [&](double nu) -> quadrature::Complex {
        double d = nu - omega;
        if (std::abs(d) < guard) return {g_deriv(omega), 0.0};
        return {(g(nu) - gw) / d, 0.0};
    };
    double body =
        quadrature::integrate(subtracted, a, omega, cfg).value.real() +
        quadrature::integrate(subtracted, omega, b, cfg).value.real();
    double log_term = gw * std::log((b - omega) / (omega - a));
    double tail_term =
        tail.kind == TailModel::Kind::Rational ? tail_pv(fit, a, b, omega) : 0.0;
    return (body + log_term + tail_term) / M_PI;
}

// --- spectral engine -------------------------------------------------------

std::vector<double> tukey_window(int n, double alpha) {
    std::vector<double> w(n, 1.0);
    int edge = static_cast<int>(std::floor(alpha * (n - 1) / 2.0));
    for (int i = 0; i <= edge && i < n; ++i) {
        double x = 2.0 * i / (alpha * (n - 1));
        double v = 0.5 * (1.0 + std::cos(M_PI * (x - 1.0)));
        w[i] = v;
        w[n - 1 - i] = v;
    }
    return w;
}

std::mutex fftw_plan_mutex;  // FFTW planning is not thread-safe

// Linear convolution of `g` with the antisymmetric kernel h (h given for
// positive offsets, h[-k] = -h[k]):  out[m] = sum_k h_k (g[m+k] - g[m-k]).
std::vector<double> antisymmetric_convolution(std::span<const double> g,
                                              const std::vector<double>& taps,
                                              int pad_factor) {
    const int n = static_cast<int>(g.size());
    std::size_t m = 1;
    while (m < static_cast<std::size_t>(std::max(pad_factor * n, 2 * n))) m *= 2;

    fftw_complex* buf_g =
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * m));
    fftw_complex* buf_h =
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * m));
    for (std::size_t i = 0; i < m; ++i) {
        buf_g[i][0] = buf_g[i][1] = 0.0;
        buf_h[i][0] = buf_h[i][1] = 0.0;
    }
    for (int i = 0; i < n; ++i) buf_g[i][0] = g[i];
    for (int k = 1; k < n; ++k) {
        buf_h[k][0] = -taps[k - 1];      // circular conv picks g[m+k] here
        buf_h[m - k][0] = taps[k - 1];
    }

    fftw_plan fwd_g, fwd_h, bwd;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fwd_g = fftw_plan_dft_1d(static_cast<int>(m), buf_g, buf_g,
                                 FFTW_FORWARD, FFTW_ESTIMATE);
        fwd_h = fftw_plan_dft_1d(static_cast<int>(m), buf_h, buf_h,
                                 FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(static_cast<int>(m), buf_g, buf_g,
                               FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(fwd_g);
    fftw_execute(fwd_h);
    for (std::size_t i = 0; i < m; ++i) {
        double re = buf_g[i][0] * buf_h[i][0] - buf_g[i][1] * buf_h[i][1];
        double im = buf_g[i][0] * buf_h[i][1] + buf_g[i][1] * buf_h[i][0];
        buf_g[i][0] = re;
        buf_g[i][1] = im;
    }
    fftw_execute(bwd);

    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = buf_g[i][0] / static_cast<double>(m);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(fwd_g);
        fftw_destroy_plan(fwd_h);
        fftw_destroy_plan(bwd);
    }
    fftw_free(buf_g);
    fftw_free(buf_h);
    return out;
}

std::vector<double> hilbert_taps(int n) {
    // classic discrete Hilbert kernel: 2/(pi k) at odd offsets, 0 at even
    std::vector<double> taps(n - 1, 0.0);
    for (int k = 1; k < n; k += 2) taps[k - 1] = 2.0 / (M_PI * k);
    return taps;
}

// Index-space Rational(1) completion: the grid spacing cancels from both the
// c/nu fit and the P-integral, so samples alone determine the tail term.
struct IndexTail {
    double c_left = 0.0, c_right = 0.0;
};

IndexTail fit_tail_index(std::span<const double> g) {
    const int n = static_cast<int>(g.size());
    const int band = std::max(4, n / 20);
    const double centre = (n - 1) / 2.0;
    auto fit = [&](int lo, int hi) {
        double num = 0.0, den = 0.0;
        for (int i = lo; i < hi; ++i) {
            double m = i - centre;
            num += g[i] / m;
            den += 1.0 / (m * m);
        }
        return num / den;
    };
    return {fit(0, band), fit(n - band, n)};
}

void add_tail_index(std::vector<double>& out, const IndexTail& t) {
    const int n = static_cast<int>(out.size());
    const double M = (n - 1) / 2.0;
    for (int i = 0; i < n; ++i) {
        double m = std::clamp(i - M, -M + 0.5, M - 0.5);
        double term;
        if (std::abs(m) < 1e-9 * M)
            term = t.c_right * (1.0 / M + m / (2.0 * M * M)) +
                   t.c_left * (1.0 / M - m / (2.0 * M * M));
        else
            term = t.c_right * std::log1p(m / (M - m)) / m +
                   t.c_left * std::log1p(m / M) / m;
        out[i] += term / M_PI;
    }
}

// --- shared reconstruction helpers ----------------------------------------

std::vector<double> component(const Spectrum& sp, bool real_part) {
    std::vector<double> out(sp.values.size());
    for (std::size_t i = 0; i < sp.values.size(); ++i)
        out[i] = real_part ? sp.values[i].real() : sp.values[i].imag();
    return out;
}

}  // namespace

void Spectrum::validate() const {
    grid.validate();
    if (static_cast<int>(values.size()) != grid.n_points)
        throw std::invalid_argument("spectrum: values length != n_points");
    for (const Complex& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("spectrum: values must be finite");
}

const char* to_string(HilbertEngine e) {
    return e == HilbertEngine::PV ? "pv" : "spectral";
}

const char* to_string(KKVerdict v) {
    switch (v) {
        case KKVerdict::Consistent: return "Consistent";
        case KKVerdict::Inconsistent: return "Inconsistent";
        default: return "Inconclusive";
    }
}

std::pair<int, int> interior_range(int n) {
    int margin = n / 10;
    return {margin, n - margin};
}

double pv_hilbert(const std::function<double(double)>& g, double omega_min,
                  double omega_max, double omega, const TailModel& tail,
                  const quadrature::Config& cfg, const PvOptions& opts) {
    cfg.validate();
    if (!(omega_min < omega_max))
        throw std::invalid_argument("pv_hilbert: omega_min must be < omega_max");
    TailFit fit;
    if (tail.kind == TailModel::Kind::Rational ||
        (tail.kind == TailModel::Kind::None && opts.require_tail_coverage))
        fit = fit_tail(g, omega_min, omega_max);
    double scale = std::abs(g(omega));
    for (int i = 0; i <= 16; ++i)
        scale = std::max(
            scale, std::abs(g(omega_min + (omega_max - omega_min) * i / 16.0)));
    const double h = 1e-6 * (omega_max - omega_min);
    auto deriv = [&](double x) { return (g(x + h) - g(x - h)) / (2.0 * h); };
    return pv_engine(g, deriv, omega_min, omega_max, omega, tail, cfg, opts,
                     fit, scale);
}

namespace {

// Spline + tail fit built once, evaluated at many omegas.
class SampledPvEngine {
public:
    SampledPvEngine(std::span<const double> samples, const FrequencyGrid& grid)
        : grid_(grid), spline_(make_spline(samples, grid)) {
        fit_ = fit_tail_samples(samples, grid);
        for (double v : samples) scale_ = std::max(scale_, std::abs(v));
    }

    double operator()(double omega, const TailModel& tail,
                      const quadrature::Config& cfg,
                      const PvOptions& opts) const {
        auto g = [this](double x) { return spline_(x); };
        auto deriv = [this](double x) { return spline_.derivative(x); };
        return pv_engine(g, deriv, grid_.omega_min, grid_.omega_max, omega,
                         tail, cfg, opts, fit_, scale_);
    }

private:
    static CubicSpline make_spline(std::span<const double> samples,
                                   const FrequencyGrid& grid) {
        std::vector<double> xs(grid.n_points);
        for (int i = 0; i < grid.n_points; ++i) xs[i] = grid.point(i);
        return CubicSpline(std::move(xs),
                           std::vector<double>(samples.begin(), samples.end()));
    }

    FrequencyGrid grid_;
    CubicSpline spline_;
    TailFit fit_;
    double scale_ = 0.0;
};

}  // namespace

double pv_hilbert(std::span<const double> samples, const FrequencyGrid& grid,
                  double omega, const TailModel& tail,
                  const quadrature::Config& cfg, const PvOptions& opts) {
    grid.validate();
    cfg.validate();
    if (static_cast<int>(samples.size()) != grid.n_points)
        throw std::invalid_argument("pv_hilbert: samples length != n_points");
    return SampledPvEngine(samples, grid)(omega, tail, cfg, opts);
}

std::vector<double> spectral_hilbert(std::span<const double> comp,
                                     HilbertDirection direction,
                                     const SpectralOptions& opts) {
    const int n = static_cast<int>(comp.size());
    if (n < 8) throw std::invalid_argument("spectral_hilbert: need >= 8 samples");
    if (opts.pad_factor < 2)
        throw std::invalid_argument("spectral_hilbert: pad_factor must be >= 2");

    std::vector<double> windowed(comp.begin(), comp.end());
    if (opts.window) {
        std::vector<double> w = tukey_window(n, opts.taper_fraction);
        for (int i = 0; i < n; ++i) windowed[i] *= w[i];
    }
    std::vector<double> out =
        antisymmetric_convolution(windowed, hilbert_taps(n), opts.pad_factor);
    if (opts.tail_completion) add_tail_index(out, fit_tail_index(comp));
    if (direction == HilbertDirection::ImagFromReal)
        for (double& v : out) v = -v;
    return out;
}

KKReport kk_check(const Spectrum& spectrum, HilbertEngine engine,
                  const KKThresholds& thresholds,
                  const quadrature::Config& cfg) {
    spectrum.validate();
    if (!(thresholds.consistent_below > 0.0) ||
        !(thresholds.inconsistent_above >= thresholds.consistent_below))
        throw std::invalid_argument("kk_check: invalid thresholds");

    KKReport report;
    report.engine = engine;
    report.thresholds = thresholds;

    const int n = spectrum.grid.n_points;
    auto [lo, hi] = interior_range(n);
    report.interior_begin = lo;
    report.interior_end = hi;

    std::vector<double> re = component(spectrum, true);
    std::vector<double> im = component(spectrum, false);

    double chi_norm_sq = 0.0;
    for (const Complex& v : spectrum.values) chi_norm_sq += std::norm(v);
    if (chi_norm_sq == 0.0) {
        report.verdict = KKVerdict::Inconclusive;
        return report;
    }

    std::vector<double> rec_re(hi - lo), rec_im(hi - lo);
    if (engine == HilbertEngine::Spectral) {
        std::vector<double> r =
            spectral_hilbert(im, HilbertDirection::RealFromImag);
        std::vector<double> s =
            spectral_hilbert(re, HilbertDirection::ImagFromReal);
        std::copy(r.begin() + lo, r.begin() + hi, rec_re.begin());
        std::copy(s.begin() + lo, s.begin() + hi, rec_im.begin());
    } else {
        quadrature::Config pv_cfg = cfg;
        pv_cfg.abs_tol = std::max(cfg.abs_tol, 1e-8);
        pv_cfg.rel_tol = std::max(cfg.rel_tol, 1e-8);
        PvOptions opts;
        opts.require_tail_coverage = false;
        SampledPvEngine from_im(im, spectrum.grid);
        SampledPvEngine from_re(re, spectrum.grid);
        for (int i = lo; i < hi; ++i) {
            double w = spectrum.grid.point(i);
            rec_re[i - lo] = from_im(w, spectrum.tail_model, pv_cfg, opts);
            rec_im[i - lo] = -from_re(w, spectrum.tail_model, pv_cfg, opts);
        }
    }

    double chi_int_sq = 0.0;
    for (int i = lo; i < hi; ++i) chi_int_sq += std::norm(spectrum.values[i]);
    const double chi_int = std::sqrt(chi_int_sq);

    auto residual = [&](const std::vector<double>& rec,
                        const std::vector<double>& given, double& max_abs) {
        double err_sq = 0.0, giv_sq = 0.0;
        max_abs = 0.0;
        for (int i = lo; i < hi; ++i) {
            double e = rec[i - lo] - given[i];
            err_sq += e * e;
            giv_sq += given[i] * given[i];
            max_abs = std::max(max_abs, std::abs(e));
        }
        double denom = std::sqrt(giv_sq);
        if (denom < 1e-12 * chi_int) denom = chi_int / std::sqrt(2.0);
        return std::sqrt(err_sq) / denom;
    };
    report.residual_rel_l2_real = residual(rec_re, re, report.max_abs_real);
    report.residual_rel_l2_imag = residual(rec_im, im, report.max_abs_imag);
    report.reconstructed_real = std::move(rec_re);
    report.reconstructed_imag = std::move(rec_im);

    double worst = report.max_residual();
    if (worst < thresholds.consistent_below)
        report.verdict = KKVerdict::Consistent;
    else if (worst > thresholds.inconsistent_above)
        report.verdict = KKVerdict::Inconsistent;
    else
        report.verdict = KKVerdict::Inconclusive;
    return report;
}

double convolution_form_residual(const Spectrum& spectrum) {
    spectrum.validate();
    double chi_norm_sq = 0.0;
    for (const Complex& v : spectrum.values) chi_norm_sq += std::norm(v);
    if (chi_norm_sq == 0.0)
        throw std::invalid_argument(
            "convolution_form_residual: degenerate (zero) spectrum");

    const int n = spectrum.grid.n_points;
    std::vector<double> re = component(spectrum, true);
    std::vector<double> im = component(spectrum, false);

    // discrete PV kernel: 0 at the singular tap, 1/(k d_omega) elsewhere,
    // times d_omega -> taps 1/k at every non-zero offset
    std::vector<double> taps(n - 1);
    for (int k = 1; k < n; ++k) taps[k - 1] = 1.0 / (M_PI * k);
    std::vector<double> d_re = antisymmetric_convolution(re, taps, 2);
    std::vector<double> d_im = antisymmetric_convolution(im, taps, 2);
    if (spectrum.tail_model.kind == TailModel::Kind::Rational) {
        add_tail_index(d_re, fit_tail_index(re));
        add_tail_index(d_im, fit_tail_index(im));
    }

    auto [lo, hi] = interior_range(n);
    double num_sq = 0.0, den_sq = 0.0;
    for (int i = lo; i < hi; ++i) {
        // chi * P(1/omega) = -pi * (H applied to chi), identity demands -i*pi*chi
        Complex conv = -M_PI * Complex(d_re[i], d_im[i]);
        Complex resid = conv + Complex(0.0, M_PI) * spectrum.values[i];
        num_sq += std::norm(resid);
        den_sq += std::norm(spectrum.values[i]);
    }
    return std::sqrt(num_sq) / (M_PI * std::sqrt(den_sq));
}

Spectrum spectrum_from_signal(const CausalSignal& signal,
                              const FrequencyGrid& grid,
                              const quadrature::Config& cfg) {
    grid.validate();
    if (signal.l1_membership != Membership::Yes)
        throw std::domain_error(
            "spectrum_from_signal: signal must be L1 (Fourier transform via "
            "the Laplace identity is unavailable otherwise)");
    Spectrum sp;
    sp.grid = grid;
    sp.values.resize(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i)
        sp.values[i] = fourier_transform(signal, grid.point(i), cfg);
    sp.tail_model = signal.spectral_decay_order >= 1.0 ? TailModel::rational()
                                                       : TailModel::none();
    return sp;
}

}  // namespace kk
