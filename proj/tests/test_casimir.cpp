#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kgc/casimir.hpp"
#include "kgc/errors.hpp"

using namespace kgc::physics;

namespace {

constexpr double kNm = 1e-9;
const PhysicalConstants kElectron{};
const double kV = 0.01 * kElectron.c;

CasimirModel repulsive(double area = 1e-18) { return {CasimirSign::repulsive, area}; }
CasimirModel attractive(double area = 1e-18) { return {CasimirSign::attractive, area}; }

// V(d) = m v^2 / 8 solved for d.
double closed_form_root(double area, double v, const PhysicalConstants& k = kElectron) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return std::cbrt(8.0 * pi2 * k.hbar * k.c * area / (720.0 * k.mass * v * v));
}

}  // namespace

TEST_CASE("constants default to CODATA electron values") {
    CHECK(kElectron.hbar == 1.054571817e-34);
    CHECK(kElectron.c == 2.99792458e8);
    CHECK(kElectron.mass == 9.1093837015e-31);
    CHECK_NOTHROW(kElectron.validate());
    PhysicalConstants bad = kElectron;
    bad.mass = -1.0;
    CHECK_THROWS_AS(bad.validate(), kgc::DomainError);
}

TEST_CASE("casimir_force") {
    const double f = casimir_force(1e-6, 1e-4);
    CHECK(f == doctest::Approx(-1.30e-7).epsilon(0.01));
    CHECK(f < 0.0);
    CHECK(casimir_force(2e-6, 1e-4) == doctest::Approx(f / 16.0).epsilon(1e-15));
    CHECK(casimir_force(1e-6, 2e-4) == doctest::Approx(2.0 * f).epsilon(1e-15));
    CHECK_THROWS_AS(casimir_force(0.0, 1e-4), kgc::DomainError);
    CHECK_THROWS_AS(casimir_force(-1e-9, 1e-4), kgc::DomainError);
    CHECK_THROWS_AS(casimir_force(1e-6, 0.0), kgc::DomainError);
}

TEST_CASE("casimir_force scaling over random separations") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> log_d(-10.0, -5.0);
    for (int i = 0; i < 200; ++i) {
        const double d = std::pow(10.0, log_d(rng));
        CHECK(casimir_force(2.0 * d, 1e-4) == doctest::Approx(casimir_force(d, 1e-4) / 16.0).epsilon(1e-14));
        CHECK(casimir_force(d, 2e-4) == doctest::Approx(2.0 * casimir_force(d, 1e-4)).epsilon(1e-15));
    }
}

TEST_CASE("casimir_potential is the force's potential") {
    const double d = 1e-6;
    const double h = 1e-4 * d;
    const auto model = attractive(1e-4);
    const double dv = (casimir_potential(d + h, model) - casimir_potential(d - h, model)) / (2.0 * h);
    CHECK(-dv == doctest::Approx(casimir_force(d, 1e-4)).epsilon(1e-3));

    for (double dd : {0.5e-9, 0.759e-9, 3e-9, 1e-6}) {
        CHECK(casimir_potential(dd, repulsive()) == -casimir_potential(dd, attractive()));
        CHECK(casimir_potential(dd, repulsive()) > 0.0);
        CHECK(casimir_potential(dd, attractive()) < 0.0);
    }
    CHECK(casimir_potential(0.759 * kNm, repulsive()) == doctest::Approx(9.9e-19).epsilon(0.01));
    CHECK_THROWS_AS(casimir_potential(0.0, repulsive()), kgc::DomainError);
    CHECK_THROWS_AS(casimir_potential(1e-9, repulsive(0.0)), kgc::DomainError);
}

TEST_CASE("q_parameter") {
    const double m = kElectron.mass;
    const double k = m * kV / (2.0 * kElectron.hbar);
    CHECK(std::abs(q_parameter(m * kV * kV / 8.0, kV)) <= 1e-14 * k * k);
    CHECK(q_parameter(0.0, kV) == doctest::Approx(-k * k).epsilon(1e-15));
    CHECK(q_parameter(0.0, kV) < 0.0);

    CHECK(q_at_separation(0.76 * kNm, repulsive(), kV) < 0.0);
    CHECK(q_at_separation(0.74 * kNm, repulsive(), kV) > 0.0);

    CHECK_THROWS_AS(q_parameter(0.0, 0.0), kgc::DomainError);
    CHECK_THROWS_AS(q_parameter(0.0, -1.0), kgc::DomainError);
    CHECK_THROWS_AS(q_parameter(0.0, kElectron.c), kgc::DomainError);
}

TEST_CASE("q is monotone in d for the repulsive model and negative for the attractive one") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(0.05, 20.0);
    for (int i = 0; i < 500; ++i) {
        double d1 = dist(rng) * kNm;
        double d2 = dist(rng) * kNm;
        if (d1 == d2) continue;
        if (d1 > d2) std::swap(d1, d2);
        CHECK(q_at_separation(d1, repulsive(), kV) > q_at_separation(d2, repulsive(), kV));
        CHECK(q_at_separation(d1, attractive(), kV) < 0.0);
    }
}

TEST_CASE("relaxation_time") {
    const double tau = relaxation_time(kV);
    CHECK(tau == doctest::Approx(1.29e-17).epsilon(0.01));
    CHECK(tau == doctest::Approx(kElectron.hbar / (kElectron.mass * kV * kV)).epsilon(1e-15));
    CHECK(relaxation_time(2.0 * kV) == doctest::Approx(tau / 4.0).epsilon(1e-15));
    CHECK_THROWS_AS(relaxation_time(0.0), kgc::DomainError);
    CHECK_THROWS_AS(relaxation_time(2.0 * kElectron.c), kgc::DomainError);
}

TEST_CASE("damped coefficients reduce to q") {
    // potential - damping^2/4 must equal q L^2 for the tau above.
    for (double d_nm : {0.6, 0.72, 0.76, 2.0}) {
        const double L = 0.05 * kNm;
        const double v_pot = casimir_potential(d_nm * kNm, repulsive());
        const auto c = damped_dimensionless(v_pot, kV, L);
        const double q = q_parameter(v_pot, kV) * L * L;
        CHECK(c.reduced_q() == doctest::Approx(q).epsilon(1e-10));
        // exp(-t/(2 tau)) in units of t~ = v t / L
        CHECK(c.damping == doctest::Approx(L / (kV * relaxation_time(kV))).epsilon(1e-14));
    }
}

TEST_CASE("pulse_regime_ok") {
    CHECK(pulse_regime_ok(1e-18, 1.29e-17));
    CHECK_FALSE(pulse_regime_ok(1.29e-17, 1.29e-17));
    const double tau = relaxation_time(kV);
    CHECK(pulse_regime_ok(0.1 * tau, tau));
    CHECK_FALSE(pulse_regime_ok(std::nextafter(0.1 * tau, 1.0), tau));
    CHECK_THROWS_AS(pulse_regime_ok(0.0, tau), kgc::DomainError);
    CHECK_THROWS_AS(pulse_regime_ok(1e-18, -1.0), kgc::DomainError);
}

TEST_CASE("find_sign_change") {
    const double oracle = closed_form_root(1e-18, kV);
    CHECK(oracle / kNm == doctest::Approx(0.751).epsilon(1e-3));

    const double tol = 1e-4 * kNm;
    const double d_star = find_sign_change(repulsive(), kV, kElectron, 0.1 * kNm, 10 * kNm, tol);
    CHECK(std::abs(d_star - oracle) <= tol);
    CHECK(std::abs(d_star / kNm - 0.759) / 0.759 <= 0.05);
    CHECK(q_at_separation(d_star - tol, repulsive(), kV) > 0.0);
    CHECK(q_at_separation(d_star + tol, repulsive(), kV) < 0.0);

    const double narrow = find_sign_change(repulsive(), kV, kElectron, 0.74 * kNm, 0.76 * kNm, tol);
    CHECK(std::abs(narrow - d_star) <= tol);

    const double fine = find_sign_change(repulsive(), kV, kElectron, 0.1 * kNm, 10 * kNm, 1e-7 * kNm);
    CHECK(std::abs(fine - oracle) <= 1e-6 * kNm);

    // d* scales as A^(1/3) v^(-2/3)
    const double bigger = find_sign_change(repulsive(8e-18), kV, kElectron, 0.1 * kNm, 10 * kNm, 1e-9 * kNm);
    CHECK(bigger == doctest::Approx(2.0 * oracle).epsilon(1e-6));

    CHECK_THROWS_AS(find_sign_change(attractive(), kV, kElectron, 0.1 * kNm, 10 * kNm), kgc::UnsupportedModelError);
    CHECK_THROWS_AS(find_sign_change(repulsive(), kV, kElectron, 1.0 * kNm, 10 * kNm), kgc::BracketError);
    CHECK_THROWS_AS(find_sign_change(repulsive(), kV, kElectron, 0.1 * kNm, 0.5 * kNm), kgc::BracketError);
    CHECK_THROWS_AS(find_sign_change(repulsive(), kV, kElectron, 1.0 * kNm, 0.5 * kNm), kgc::DomainError);
}

TEST_CASE("to_dimensionless") {
    const auto zero = to_dimensionless(0.0, kV, 1e-9);
    CHECK(zero.q_dimless == 0.0);
    const auto p = to_dimensionless(4e18, kV, 1e-9);
    CHECK(p.q_dimless == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(p.q_phys == 4e18);
    CHECK(p.q_dimless / (p.length_scale * p.length_scale) == doctest::Approx(p.q_phys).epsilon(1e-15));
    CHECK_THROWS_AS(to_dimensionless(1.0, kV, 0.0), kgc::DomainError);
    CHECK_THROWS_AS(to_dimensionless(1.0, kV, -1e-9), kgc::DomainError);
}
