#include <doctest.h>

#include <cmath>
#include <complex>

#include "kk/signal_catalog.hpp"

using kk::catalog_get;
using kk::CausalSignal;
using kk::Complex;
using kk::evaluate;
using kk::Membership;
using kk::ProbeVerdict;

TEST_SUITE("signal-catalog") {

TEST_CASE("exp-decay metadata and closed forms") {
    CausalSignal s = catalog_get("exp-decay", {{"alpha", 1.0}});
    CHECK(s.l1_membership == Membership::Yes);
    CHECK(s.l2_membership == Membership::Yes);
    REQUIRE(s.lambda0.has_value());
    CHECK(*s.lambda0 == doctest::Approx(-1.0));
    CHECK(s.closed_form_laplace(Complex(1.0, 0.0)).real() ==
          doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("evaluate: causality gate and pointwise values") {
    CausalSignal exp1 = catalog_get("exp-decay");
    CHECK(evaluate(exp1, -3.0) == 0.0);
    CHECK(evaluate(exp1, 0.0) == doctest::Approx(1.0));
    CausalSignal tail = catalog_get("inv-t-tail");
    CHECK(evaluate(tail, 2.0) == doctest::Approx(0.5));
    CHECK(evaluate(tail, 0.5) == 0.0);
    CHECK_THROWS_AS(evaluate(exp1, std::nan("")), std::invalid_argument);
}

TEST_CASE("causality: dense negative-time sample is exactly zero") {
    for (const std::string& id : kk::catalog_ids()) {
        CausalSignal s = catalog_get(id);
        if (!s.causal) continue;
        for (int i = 1; i <= 200; ++i) {
            double t = -1e-9 * std::pow(1.25, i);
            CHECK(evaluate(s, t) == 0.0);
        }
    }
}

TEST_CASE("inv-sqrt-pulse: documented clamp keeps evaluate total") {
    CausalSignal s = catalog_get("inv-sqrt-pulse");
    CHECK(evaluate(s, 0.0) == doctest::Approx(1e150));
    CHECK(evaluate(s, 0.25) == doctest::Approx(2.0));
    CHECK(evaluate(s, 2.0) == 0.0);
}

TEST_CASE("closed-form Fourier equals closed-form Laplace at s = -i omega") {
    for (const std::string& id : kk::catalog_ids()) {
        CausalSignal s = catalog_get(id);
        if (!s.closed_form_laplace || !s.closed_form_fourier) continue;
        for (double w : {-10.0, -1.0, -0.1, 0.0, 0.1, 1.0, 10.0}) {
            Complex lhs = s.closed_form_fourier(w);
            Complex rhs = s.closed_form_laplace(Complex(0.0, -w));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(catalog_get("nope"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("exp-decay", {{"alpha", -1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("exp-decay", {{"beta", 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("rect-pulse", {{"alpha", 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("damped-oscillator", {{"omega0", 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("classify reproduces the catalog ground truth for all entries") {
    for (const std::string& id : kk::catalog_ids()) {
        CausalSignal s = catalog_get(id);
        kk::IntegrabilityVerdict v = kk::classify_integrability(s);
        INFO("signal ", id);
        CHECK(std::string(to_string(v.l1)) == to_string(s.l1_membership));
        CHECK(std::string(to_string(v.l2)) == to_string(s.l2_membership));
    }
}

TEST_CASE("classify: partial integrals are recorded and sane") {
    kk::IntegrabilityVerdict v =
        kk::classify_integrability(catalog_get("exp-decay"));
    CHECK(v.l1_partial_integral == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(v.l2_partial_integral == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(v.t_max_probed == doctest::Approx(1e6));

    // heaviside: |f| partial integral equals T itself
    kk::IntegrabilityVerdict h =
        kk::classify_integrability(catalog_get("heaviside"));
    CHECK(h.l1 == ProbeVerdict::No);
    CHECK(h.l2 == ProbeVerdict::No);
}

TEST_CASE("classify: partial integrals are non-decreasing along the schedule") {
    // probed via a custom prefix schedule on the log-divergent case
    CausalSignal s = catalog_get("inv-t-tail");
    double prev = 0.0;
    for (double T : {10.0, 1e2, 1e3, 1e4}) {
        kk::IntegrabilityVerdict v =
            kk::classify_integrability(s, {T / 2.0, T}, 1e-6);
        CHECK(v.l1_partial_integral >= prev - 1e-12);
        prev = v.l1_partial_integral;
    }
}

TEST_CASE("classify input validation") {
    CausalSignal s = catalog_get("exp-decay");
    CHECK_THROWS_AS(kk::classify_integrability(s, {}, 1e-6),
                    std::invalid_argument);
    CHECK_THROWS_AS(kk::classify_integrability(s, {10.0, 5.0}, 1e-6),
                    std::invalid_argument);
    CHECK_THROWS_AS(kk::classify_integrability(s, {10.0, 20.0}, 0.0),
                    std::invalid_argument);
}

}  // TEST_SUITE
