"""Python-facing smoke tests for the compiled module.

Importable both as the installed package (kklaplace) and as the raw
extension next to the build tree (_kklaplace on PYTHONPATH).
"""

import cmath
import math
import sys

try:
    import kklaplace as kk
except ImportError:
    import _kklaplace as kk


def approx(a, b, tol=1e-8):
    return abs(a - b) <= tol


def main():
    # catalog and evaluation
    assert "exp-decay" in kk.catalog_ids()
    sig = kk.catalog_get("exp-decay", {"alpha": 1.0})
    assert sig.causal and sig.l1 == "Yes" and approx(sig.lambda0, -1.0)
    assert kk.evaluate(sig, -3.0) == 0.0
    assert approx(kk.evaluate(sig, 1.0), math.exp(-1.0))

    # transforms
    assert approx(kk.laplace_transform(sig, 1.0 + 0.0j), 0.5, 1e-8)
    assert approx(kk.fourier_transform(sig, 1.0), (1 + 1j) / 2, 1e-8)
    inv = kk.bromwich_inverse(sig, t=1.0)
    assert approx(inv["value"], math.exp(-1.0), 1e-3)
    lam = kk.estimate_lambda0(sig, -2.0, 0.0)
    assert abs(lam["value"] + 1.0) <= 1e-3

    # integrability counterexamples
    tail = kk.classify_integrability(kk.catalog_get("inv-t-tail"))
    assert (tail["l1"], tail["l2"]) == ("No", "Yes")

    # contour closure
    bd = kk.integrate_contour(sig, omega=2.0, radius=100.0, epsilon=1e-3)
    assert abs(bd["total"]) < 1e-6
    assert abs(bd["small_arc"] - 1j * math.pi / (1 - 2j)) < 1e-2
    assert kk.kernel_bound_check(1.0, 2.0, 2.0, [0.0, -1.5, 1.5])

    # spectrum + consistency check
    grid = kk.FrequencyGrid(-50.0, 50.0, 512)
    sp = kk.spectrum_from_signal(sig, grid)
    assert sp.tail_model == "rational"
    w = grid.point(100)
    assert abs(sp.values[100] - 1.0 / (1.0 - 1j * w)) < 1e-8
    rep = kk.kk_check(sp, engine="pv")
    assert rep["verdict"] == "Consistent", rep
    rep2 = kk.kk_check(sp, engine="spectral")
    assert rep2["verdict"] == "Consistent", rep2
    assert kk.convolution_form_residual(sp) < 5e-2

    # Hilbert engines on raw samples
    samples = [grid.point(i) / (1.0 + grid.point(i) ** 2) for i in range(512)]
    pv_val = kk.pv_hilbert(samples, grid, 0.0)
    assert approx(pv_val, 1.0, 1e-2)
    rec = kk.spectral_hilbert(samples)
    assert approx(rec[256], 1.0 / (1.0 + grid.point(256) ** 2), 2e-2)

    print("python smoke tests passed (module version %s)" % kk.__version__)
    return 0


if __name__ == "__main__":
    sys.exit(main())
