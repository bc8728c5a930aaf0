#pragma once

// Test-only reference values. Everything here is computed independently of
// the library: MPFR multi-precision arithmetic, or straightforward brute-force
// sums and integrals.

#include <mpfr.h>

#include <cmath>
#include <functional>

namespace kgc::testing {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t bits = 256) { mpfr_init2(v_, bits); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;

    mpfr_ptr get() { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

/// J0 from MPFR (correctly rounded).
inline double oracle_j0(double x) {
    Mpfr r(128), a(128);
    mpfr_set_d(a.get(), x, MPFR_RNDN);
    mpfr_j0(r.get(), a.get(), MPFR_RNDN);
    return r.to_double();
}

/// Ascending series sum_k s^k (x^2/4)^k / (k!)^2 in 'bits' of precision,
/// s = -1 for J0 and +1 for I0, stopped once terms fall below 1e-40 of the sum.
inline double oracle_series(double x, int sign, mpfr_prec_t bits = 256) {
    Mpfr y(bits), term(bits), sum(bits), tmp(bits);
    mpfr_set_d(y.get(), x, MPFR_RNDN);
    mpfr_sqr(y.get(), y.get(), MPFR_RNDN);
    mpfr_div_ui(y.get(), y.get(), 4, MPFR_RNDN);
    mpfr_set_ui(term.get(), 1, MPFR_RNDN);
    mpfr_set_ui(sum.get(), 1, MPFR_RNDN);
    for (unsigned long k = 1; k < 100000; ++k) {
        mpfr_mul(term.get(), term.get(), y.get(), MPFR_RNDN);
        mpfr_div_ui(term.get(), term.get(), k * k, MPFR_RNDN);
        if (sign < 0) mpfr_neg(term.get(), term.get(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        mpfr_abs(tmp.get(), term.get(), MPFR_RNDN);
        mpfr_mul_d(tmp.get(), tmp.get(), 1e40, MPFR_RNDN);
        if (k > 2 * static_cast<unsigned long>(x) + 2 && mpfr_cmpabs(tmp.get(), sum.get()) < 0) break;
    }
    return sum.to_double();
}

inline double oracle_i0(double x) { return oracle_series(x, +1, 128); }

/// exp(-x) I0(x) with both factors in extended precision.
inline double oracle_i0_scaled(double x) {
    Mpfr y(160), term(160), sum(160), e(160);
    mpfr_set_d(y.get(), x, MPFR_RNDN);
    mpfr_sqr(y.get(), y.get(), MPFR_RNDN);
    mpfr_div_ui(y.get(), y.get(), 4, MPFR_RNDN);
    mpfr_set_ui(term.get(), 1, MPFR_RNDN);
    mpfr_set_ui(sum.get(), 1, MPFR_RNDN);
    for (unsigned long k = 1; k < 100000; ++k) {
        mpfr_mul(term.get(), term.get(), y.get(), MPFR_RNDN);
        mpfr_div_ui(term.get(), term.get(), k * k, MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        Mpfr scaled(160);
        mpfr_mul_d(scaled.get(), term.get(), 1e40, MPFR_RNDN);
        if (k > 2 * static_cast<unsigned long>(x) + 2 && mpfr_cmp(scaled.get(), sum.get()) < 0) break;
    }
    mpfr_set_d(e.get(), -x, MPFR_RNDN);
    mpfr_exp(e.get(), e.get(), MPFR_RNDN);
    mpfr_mul(sum.get(), sum.get(), e.get(), MPFR_RNDN);
    return sum.to_double();
}

/// erf Maclaurin series 2/sqrt(pi) sum (-1)^n x^(2n+1) / (n! (2n+1)) in MPFR.
inline double oracle_erf(double x) {
    Mpfr x2(256), power(256), term(256), sum(256), tmp(256), pi(256);
    mpfr_set_d(power.get(), x, MPFR_RNDN);
    mpfr_set_d(x2.get(), x, MPFR_RNDN);
    mpfr_sqr(x2.get(), x2.get(), MPFR_RNDN);
    mpfr_set(sum.get(), power.get(), MPFR_RNDN);
    for (unsigned long n = 1; n < 10000; ++n) {
        mpfr_mul(power.get(), power.get(), x2.get(), MPFR_RNDN);
        mpfr_div_ui(power.get(), power.get(), n, MPFR_RNDN);
        mpfr_neg(power.get(), power.get(), MPFR_RNDN);
        mpfr_div_ui(term.get(), power.get(), 2 * n + 1, MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        mpfr_abs(tmp.get(), term.get(), MPFR_RNDN);
        if (mpfr_cmp_d(tmp.get(), 1e-20) < 0) break;
    }
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_sqrt(pi.get(), pi.get(), MPFR_RNDN);
    mpfr_mul_ui(sum.get(), sum.get(), 2, MPFR_RNDN);
    mpfr_div(sum.get(), sum.get(), pi.get(), MPFR_RNDN);
    return sum.to_double();
}

/// Composite Simpson with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, long n) {
    const double h = (b - a) / static_cast<double>(n);
    double s = f(a) + f(b);
    for (long i = 1; i < n; ++i) s += f(a + h * static_cast<double>(i)) * ((i % 2) ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Closed form of the q = 0 solution for f = exp(-x^2):
/// (sqrt(pi)/4) (erf(x + t) - erf(x - t)).
inline double gaussian_dalembert(double x, double t) {
    return 0.25 * std::sqrt(M_PI) * (std::erf(x + t) - std::erf(x - t));
}

}  // namespace kgc::testing
