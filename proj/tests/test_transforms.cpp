#include <doctest.h>

#include <cmath>
#include <complex>

#include "kk/transforms.hpp"

using kk::catalog_get;
using kk::CausalSignal;
using kk::Complex;
using kk::ComplexPoint;
using kk::laplace_transform;

namespace {

// frozen reference values (high-precision quadrature oracles)
constexpr double kExpIntegral1 = 0.21938393439552027368;   // int_1^inf e^-t/t
constexpr double kInvSqrtLaplace1 = 1.4936482656248540508; // int_0^1 e^-t/sqrt(t)

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("laplace: closed-form checks") {
    CausalSignal e = catalog_get("exp-decay");
    CHECK(std::abs(laplace_transform(e, {1.0, 0.0}) - Complex(0.5, 0.0)) <
          1e-9);
    CHECK(std::abs(laplace_transform(e, {0.0, 0.0}) - Complex(1.0, 0.0)) <
          1e-9);

    CausalSignal r = catalog_get("rect-pulse");
    CHECK(std::abs(laplace_transform(r, {0.0, 0.0}) - Complex(1.0, 0.0)) <
          1e-9);

    // complex point against the closed form
    Complex s(0.7, -2.3);
    CHECK(std::abs(laplace_transform(e, ComplexPoint::from_complex(s)) -
                   e.closed_form_laplace(s)) < 1e-9);

    CausalSignal d = catalog_get("damped-oscillator");
    Complex sd(0.2, 1.1);
    CHECK(std::abs(laplace_transform(d, ComplexPoint::from_complex(sd)) -
                   d.closed_form_laplace(sd)) < 1e-9);
}

TEST_CASE("laplace: signals without closed forms, frozen oracles") {
    CHECK(std::abs(laplace_transform(catalog_get("inv-t-tail"), {1.0, 0.0}) -
                   Complex(kExpIntegral1, 0.0)) < 1e-9);
    CHECK(std::abs(laplace_transform(catalog_get("inv-sqrt-pulse"), {1.0, 0.0}) -
                   Complex(kInvSqrtLaplace1, 0.0)) < 1e-8);
}

TEST_CASE("laplace: domain errors") {
    CausalSignal e = catalog_get("exp-decay");
    CHECK_THROWS_AS(laplace_transform(e, {-1.5, 0.0}), std::domain_error);
    CHECK_THROWS_AS(laplace_transform(catalog_get("constant"), {1.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        laplace_transform(catalog_get("heaviside"), {-0.5, 0.0}),
        std::domain_error);
}

TEST_CASE("laplace linearity on a synthetic combination") {
    CausalSignal a = catalog_get("exp-decay", {{"alpha", 1.0}});
    CausalSignal b = catalog_get("damped-oscillator");
    const double c1 = 2.5, c2 = -0.75;
    CausalSignal combo;
    combo.id = "synthetic-combo";
    combo.time_fn = [=](double t) { return c1 * a.time_fn(t) + c2 * b.time_fn(t); };
    combo.lambda0 = -1.0;
    combo.l1_membership = kk::Membership::Yes;
    combo.envelope = {kk::Envelope::Kind::Exponential, std::abs(c1) + std::abs(c2),
                      1.0, 0.0, 0.0, 0.0};
    for (Complex s : {Complex(0.5, 0.0), Complex(1.0, -3.0), Complex(0.0, 2.0)}) {
        Complex lhs = laplace_transform(combo, ComplexPoint::from_complex(s));
        Complex rhs = c1 * laplace_transform(a, ComplexPoint::from_complex(s)) +
                      c2 * laplace_transform(b, ComplexPoint::from_complex(s));
        CHECK(std::abs(lhs - rhs) < 2e-9);
    }
}

TEST_CASE("fourier: identity with the Laplace path is exact by construction") {
    CausalSignal e = catalog_get("exp-decay");
    for (double w : {-10.0, -1.0, -0.1, 0.0, 0.1, 1.0, 10.0}) {
        Complex f = kk::fourier_transform(e, w);
        Complex l = laplace_transform(e, {0.0, -w});
        CHECK(f == l);  // same code path, bit-identical
        CHECK(std::abs(f - e.closed_form_fourier(w)) < 1e-9);
    }
}

TEST_CASE("fourier: closed forms for all L1 signals with them") {
    for (const char* id : {"exp-decay", "damped-oscillator", "rect-pulse"}) {
        CausalSignal s = catalog_get(id);
        for (double w : {-10.0, -1.0, -0.1, 0.0, 0.1, 1.0, 10.0}) {
            INFO(id, " at w=", w);
            CHECK(std::abs(kk::fourier_transform(s, w) -
                           s.closed_form_fourier(w)) < 1e-8);
        }
    }
}

TEST_CASE("fourier: spec examples") {
    CHECK(std::abs(kk::fourier_transform(catalog_get("exp-decay"), 0.0) -
                   Complex(1.0, 0.0)) < 1e-9);
    CHECK(std::abs(kk::fourier_transform(catalog_get("exp-decay"), 1.0) -
                   Complex(0.5, 0.5)) < 1e-9);
    CHECK(std::abs(kk::fourier_transform(catalog_get("damped-oscillator"), 0.0) -
                   Complex(0.4, 0.0)) < 1e-9);
    CHECK_THROWS_AS(kk::fourier_transform(catalog_get("inv-t-tail"), 1.0),
                    std::domain_error);
}

TEST_CASE("hermitian symmetry of the numerical Fourier transform") {
    for (const char* id : {"exp-decay", "rect-pulse", "inv-sqrt-pulse"}) {
        CausalSignal s = catalog_get(id);
        for (double w : {0.3, 1.7, 12.0}) {
            Complex plus = kk::fourier_transform(s, w);
            Complex minus = kk::fourier_transform(s, -w);
            CHECK(std::abs(minus - std::conj(plus)) < 1e-8);
        }
    }
}

TEST_CASE("estimate_lambda0: bisection against known abscissas") {
    auto e = kk::estimate_lambda0(catalog_get("exp-decay"), {-2.0, 0.0});
    CHECK(!e.at_lower_bound);
    CHECK(std::abs(e.value - (-1.0)) <= 1e-3);

    auto h = kk::estimate_lambda0(catalog_get("heaviside"), {-1.0, 1.0});
    CHECK(!h.at_lower_bound);
    CHECK(std::abs(h.value) <= 1e-3);

    auto r = kk::estimate_lambda0(catalog_get("rect-pulse"), {-5.0, 0.0});
    CHECK(r.at_lower_bound);  // compact support: converges everywhere probed
    CHECK(r.value == doctest::Approx(-5.0));

    CHECK_THROWS_AS(
        kk::estimate_lambda0(catalog_get("heaviside"), {-2.0, -1.0}),
        std::domain_error);
}

TEST_CASE("riemann-lebesgue probe: closed-form magnitudes and decay") {
    auto e = kk::riemann_lebesgue_probe(catalog_get("exp-decay"), 0.0,
                                        {1.0, 10.0, 100.0});
    CHECK(e[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(e[1] == doctest::Approx(1.0 / 11.0).epsilon(1e-9));
    CHECK(e[2] == doctest::Approx(1.0 / 101.0).epsilon(1e-9));

    auto r = kk::riemann_lebesgue_probe(catalog_get("rect-pulse"), 0.0,
                                        {1.0, 10.0, 100.0});
    CHECK(r[0] == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-9));
    CHECK(r[1] == doctest::Approx((1.0 - std::exp(-10.0)) / 10.0).epsilon(1e-9));
    CHECK(r[2] == doctest::Approx(0.01).epsilon(1e-7));

    // magnitudes vanish along the default sequence for every L1 signal:
    // eventually decreasing, final below first by at least 100x
    for (const char* id :
         {"exp-decay", "damped-oscillator", "rect-pulse", "inv-sqrt-pulse"}) {
        auto m = kk::riemann_lebesgue_probe(catalog_get(id), 5.0);
        INFO(id);
        for (std::size_t i = 1; i < m.size(); ++i) CHECK(m[i] < m[i - 1]);
        CHECK(m.back() * 100.0 <= m.front());
    }
}

TEST_CASE("truncated Fourier sequence") {
    auto tail = kk::truncated_fourier_sequence(catalog_get("inv-t-tail"),
                                               {10, 100, 1000}, 1.0);
    double d1 = std::abs(tail[1] - tail[0]);
    double d2 = std::abs(tail[2] - tail[1]);
    CHECK(d2 < d1);  // Cauchy behaviour of the L2 extension at omega != 0

    auto e = kk::truncated_fourier_sequence(catalog_get("exp-decay"), {10, 20},
                                            0.0);
    CHECK(std::abs(e[0] - Complex(1.0, 0.0)) < 1e-4);
    CHECK(std::abs(e[1] - Complex(1.0, 0.0)) < 1e-4);

    auto h = kk::truncated_fourier_sequence(catalog_get("heaviside"), {10, 100},
                                            0.0);
    CHECK(h[0].real() == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(h[1].real() == doctest::Approx(100.0).epsilon(1e-9));

    CHECK_THROWS_AS(kk::truncated_fourier_sequence(catalog_get("exp-decay"),
                                                   {10, 10}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("bromwich inversion round-trips exp-decay") {
    auto transform = [](Complex s) { return 1.0 / (s + 1.0); };
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
        auto r = kk::bromwich_inverse(transform, -1.0, t, 0.0, 1e4);
        CHECK(std::abs(r.value - std::exp(-t)) < 1e-3);
        CHECK(r.truncation_error < 1e-3);
    }
    auto causal = kk::bromwich_inverse(transform, -1.0, -1.0, 0.0, 1e4);
    CHECK(std::abs(causal.value) < 1e-3);

    CHECK_THROWS_AS(kk::bromwich_inverse(transform, -1.0, 1.0, -2.0, 1e4),
                    std::domain_error);
}

}  // TEST_SUITE
