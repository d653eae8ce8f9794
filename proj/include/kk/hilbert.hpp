#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kk/quadrature.hpp"
#include "kk/signal_catalog.hpp"
#include "kk/types.hpp"

namespace kk {

enum class HilbertDirection { RealFromImag, ImagFromReal };
enum class HilbertEngine { PV, Spectral };
enum class KKVerdict { Consistent, Inconsistent, Inconclusive };

const char* to_string(HilbertEngine e);
const char* to_string(KKVerdict v);

/// Fraction of the grid (centred) on which reconstructions and residuals are
/// evaluated; the outer 10% per side is excluded because the principal-value
/// machinery degrades toward the grid boundary.
constexpr double kInteriorFraction = 0.8;

/// Half-open index range [begin, end) of the interior points of an n-grid.
std::pair<int, int> interior_range(int n);

/// Relative tolerance within which the two engines are expected to agree on
/// smooth decaying spectra.
constexpr double kEngineCrossTolerance = 1e-2;

struct PvOptions {
    /// With no tail model attached, refuse inputs whose edge samples carry
    /// non-negligible mass (the truncated principal value would be biased).
    bool require_tail_coverage = true;
};

/// (1/pi) P-integral of component(nu)/(nu-omega) over the grid span by
/// singularity subtraction, plus the analytic log term and the tail-model
/// completion. Evaluator form.
double pv_hilbert(const std::function<double(double)>& component,
                  double omega_min, double omega_max, double omega,
                  const TailModel& tail, const quadrature::Config& cfg = {},
                  const PvOptions& opts = {});

/// Same on grid samples (cubic-spline interpolated).
double pv_hilbert(std::span<const double> samples, const FrequencyGrid& grid,
                  double omega, const TailModel& tail,
                  const quadrature::Config& cfg = {},
                  const PvOptions& opts = {});

struct SpectralOptions {
    bool window = true;            // Tukey taper before the transform
    double taper_fraction = 0.1;
    int pad_factor = 4;            // zero padding of the conjugate-domain pass
    bool tail_completion = true;   // index-space Rational(1) completion
};

/// Discrete Hilbert transform of uniform-grid samples: Tukey window,
/// antisymmetric odd-tap kernel 2/(pi k) applied as a multiplier in the
/// conjugate (FFT) domain with zero padding, plus the same Rational(1) tail
/// completion the PV engine uses. Sign convention fixed by the e^{+i omega t}
/// phasor: RealFromImag applies +H, ImagFromReal applies -H.
std::vector<double> spectral_hilbert(std::span<const double> component,
                                     HilbertDirection direction,
                                     const SpectralOptions& opts = {});

struct KKThresholds {
    double consistent_below = 0.05;
    double inconsistent_above = 0.25;
};

struct KKReport {
    HilbertEngine engine = HilbertEngine::PV;
    double residual_rel_l2_real = 0.0;
    double residual_rel_l2_imag = 0.0;
    double max_abs_real = 0.0;
    double max_abs_imag = 0.0;
    KKVerdict verdict = KKVerdict::Inconclusive;
    KKThresholds thresholds;
    double interior_fraction = kInteriorFraction;

    // reconstruction on the interior points, for plotting and cross-checks
    int interior_begin = 0, interior_end = 0;
    std::vector<double> reconstructed_real, reconstructed_imag;

    double max_residual() const {
        return std::max(residual_rel_l2_real, residual_rel_l2_imag);
    }
};

/// Reconstructs each component of the spectrum from the other with the
/// selected engine and reports relative-L2 residuals over the interior grid.
KKReport kk_check(const Spectrum& spectrum, HilbertEngine engine,
                  const KKThresholds& thresholds = {},
                  const quadrature::Config& cfg = {});

/// Residual of the convolution identity chi * P(1/omega) = -i pi chi,
/// normalised to ||chi * P(1/omega) + i pi chi|| / (pi ||chi||) over the
/// interior grid, with the discrete PV kernel (0 at the singular tap,
/// 1/(k d_omega) elsewhere, times d_omega).
double convolution_form_residual(const Spectrum& spectrum);

/// Samples the numerical Fourier transform of an L1 signal on the grid and
/// attaches a Rational(1) tail model when the spectrum decays at least as
/// fast as 1/omega.
Spectrum spectrum_from_signal(const CausalSignal& signal,
                              const FrequencyGrid& grid,
                              const quadrature::Config& cfg = {});

}  // namespace kk
