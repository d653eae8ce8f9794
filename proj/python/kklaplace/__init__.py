"""Kramers-Kronig toolkit: causal-signal transforms, contour verification
and Hilbert-transform consistency checks."""

from ._kklaplace import (  # noqa: F401
    CausalSignal,
    FrequencyGrid,
    Spectrum,
    __version__,
    bromwich_inverse,
    catalog_get,
    catalog_ids,
    classify_integrability,
    convolution_form_residual,
    estimate_lambda0,
    evaluate,
    fourier_transform,
    integrate_contour,
    kernel_bound_check,
    kk_check,
    laplace_transform,
    pv_hilbert,
    riemann_lebesgue_probe,
    spectral_hilbert,
    spectrum_from_signal,
    truncated_fourier_sequence,
)
