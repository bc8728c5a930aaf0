#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kgc/errors.hpp"
#include "kgc/quadrature.hpp"
#include "oracles.hpp"

using kgc::integrate;
using kgc::QuadratureMethod;
using kgc::QuadratureSpec;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

QuadratureSpec spec_for(QuadratureMethod m) {
    QuadratureSpec s;
    s.method = m;
    return s;
}

}  // namespace

TEST_CASE("constant and gaussian integrands") {
    for (auto m : {QuadratureMethod::adaptive_simpson, QuadratureMethod::gauss_legendre}) {
        const auto spec = spec_for(m);
        const auto one = integrate([](double) { return 1.0; }, 0.0, 1.0, spec);
        CHECK(std::abs(one.value - 1.0) <= 1e-14);
        const auto g = integrate([](double z) { return std::exp(-z * z); }, -1.0, 1.0, spec);
        CHECK(std::abs(g.value - kSqrtPi * std::erf(1.0)) <= 1e-10);
        CHECK(std::abs(g.value - 1.4936482656248540) <= 1e-10);
        CHECK(g.est_error >= 0.0);
    }
}

TEST_CASE("J0 over its first positive lobe") {
    // 10^6-panel Simpson over the standard library J0.
    const double zero = 2.404825557695773;
    const double oracle = kgc::testing::simpson([](double z) { return std::cyl_bessel_j(0.0, z); },
                                                0.0, zero, 1000000);
    CHECK(oracle == doctest::Approx(1.470300043384179).epsilon(1e-13));
    for (auto m : {QuadratureMethod::adaptive_simpson, QuadratureMethod::gauss_legendre}) {
        const auto r = integrate([](double z) { return std::cyl_bessel_j(0.0, z); }, 0.0, zero, spec_for(m));
        CHECK(std::abs(r.value - oracle) <= 1e-9);
    }
}

TEST_CASE("oscillatory integrand with seeded panels") {
    const auto f = [](double z) { return std::sin(40.0 * z) * std::exp(-z); };
    // integral_0^3 e^-z sin(40 z) dz
    const double exact = (40.0 - std::exp(-3.0) * (std::sin(120.0) + 40.0 * std::cos(120.0))) / 1601.0;
    for (auto m : {QuadratureMethod::adaptive_simpson, QuadratureMethod::gauss_legendre}) {
        const auto r = integrate(f, 0.0, 3.0, spec_for(m), 32);
        CHECK(std::abs(r.value - exact) <= 1e-9);
    }
}

TEST_CASE("empty interval and invalid input") {
    QuadratureSpec s;
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0, s).value == 0.0);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0, s), kgc::InvalidArgument);
    s.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, s), kgc::InvalidArgument);
    s = {};
    s.max_subdivisions = 0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, s), kgc::InvalidArgument);
}

TEST_CASE("budget exhaustion reports a partial result") {
    const auto f = [](double z) { return std::sin(500.0 * z); };
    for (auto m : {QuadratureMethod::adaptive_simpson, QuadratureMethod::gauss_legendre}) {
        auto s = spec_for(m);
        s.max_subdivisions = 8;
        try {
            integrate(f, 0.0, 1.0, s);
            FAIL("expected AccuracyError");
        } catch (const kgc::AccuracyError& e) {
            CHECK(std::isfinite(e.best_estimate()));
            CHECK(e.error_bound() >= 0.0);
        }
    }
}

TEST_CASE("interval count grows with tighter tolerance") {
    const auto f = [](double z) { return std::exp(-z * z); };
    QuadratureSpec loose;
    loose.abs_tol = loose.rel_tol = 1e-6;
    QuadratureSpec tight;
    tight.abs_tol = tight.rel_tol = 1e-12;
    const auto a = integrate(f, -3.0, 3.0, loose);
    const auto b = integrate(f, -3.0, 3.0, tight);
    CHECK(a.intervals <= b.intervals);
    CHECK(std::abs(b.value - kSqrtPi * std::erf(3.0)) <= 1e-12);
}
