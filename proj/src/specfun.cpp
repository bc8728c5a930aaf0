#include "kgc/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "kgc/errors.hpp"

namespace kgc::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) {
        throw InvalidArgument(std::string(who) + ": argument must be finite");
    }
}

}  // namespace

namespace detail {

// J0(x) = sum_k (-1)^k (x^2/4)^k / (k!)^2. The rounding error is bounded by the
// sum of term magnitudes, which is I0(x) <= I0(8) ~ 427 on this branch.
EvalResult j0_series(double x) {
    const double y = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    double abs_sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -y / (static_cast<double>(k) * k);
        sum += term;
        abs_sum += std::abs(term);
        if (std::abs(term) < 1e-18 * abs_sum) {
            break;
        }
    }
    return {sum, 4.0 * kEps * abs_sum};
}

// Miller's backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, started well
// above the turning point and normalised with J0 + 2 sum_k J_{2k} = 1.
EvalResult j0_miller(double x) {
    int start = static_cast<int>(1.5 * x + 40.0);
    start += start % 2;
    double next = 0.0;  // J_{k+1}
    double curr = 1e-30;  // J_k
    double even_sum = 0.0;
    for (int k = start; k >= 1; --k) {
        const double prev = (2.0 * k / x) * curr - next;
        next = curr;
        curr = prev;
        // curr now holds J_{k-1}
        if ((k - 1) % 2 == 0 && k - 1 > 0) {
            even_sum += curr;
        }
        if (std::abs(curr) > 1e250) {
            curr *= 1e-250;
            next *= 1e-250;
            even_sum *= 1e-250;
        }
    }
    const double norm = curr + 2.0 * even_sum;
    return {curr / norm, (start + 16) * kEps};
}

// Hankel expansion J0 = sqrt(2/(pi x)) (P cos w - Q sin w), w = x - pi/4.
// cos w and sin w are formed from cos x and sin x so that no rounding is
// introduced by shifting a large argument.
EvalResult j0_hankel(double x) {
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double last = 1.0;
    for (int k = 1; k < 400; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (-(odd * odd)) / (8.0 * k * x);
        if (std::abs(next) > std::abs(term)) {
            break;  // asymptotic series has started to diverge
        }
        term = next;
        last = std::abs(term);
        // a_k / x^k enters P (even k) or Q (odd k) with alternating signs
        const int half = k / 2;
        const double sign = (half % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if (last < 1e-18) {
            break;
        }
    }
    const double c = std::cos(x);
    const double s = std::sin(x);
    const double amp = 1.0 / std::sqrt(std::numbers::pi * x);
    const double value = amp * (p * (c + s) - q * (s - c));
    return {value, amp * (2.0 * last + 8.0 * kEps)};
}

EvalResult i0_series(double x) {
    const double y = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= y / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * sum) {
            break;
        }
    }
    return {sum, 4.0 * kEps * sum};
}

// exp(-x) I0(x) ~ (2 pi x)^{-1/2} sum_k ((2k-1)!!)^2 / (k! (8x)^k).
// The neglected exp(-2x) companion is below 1e-13 relative for x >= 15.
EvalResult i0_scaled_asymptotic(double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (odd * odd) / (8.0 * k * x);
        if (next > term) {
            break;
        }
        term = next;
        sum += term;
        if (term < 1e-18 * sum) {
            break;
        }
    }
    const double amp = 1.0 / std::sqrt(2.0 * std::numbers::pi * x);
    const double rel = 4.0 * kEps + term / sum + std::exp(-2.0 * x);
    return {amp * sum, amp * sum * rel};
}

}  // namespace detail

EvalResult bessel_j0(double x) {
    require_finite(x, "bessel_j0");
    const double ax = std::abs(x);
    if (ax < detail::kJ0SeriesLimit) {
        return detail::j0_series(ax);
    }
    if (ax < detail::kJ0RecurrenceLimit) {
        return detail::j0_miller(ax);
    }
    return detail::j0_hankel(ax);
}

EvalResult bessel_i0_scaled(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw InvalidArgument("bessel_i0_scaled: argument must be finite and >= 0");
    }
    if (x < detail::kI0SeriesLimit) {
        const auto r = detail::i0_series(x);
        const double scale = std::exp(-x);
        return {r.value * scale, (r.est_error + 2.0 * kEps * r.value) * scale};
    }
    return detail::i0_scaled_asymptotic(x);
}

EvalResult bessel_i0(double x) {
    require_finite(x, "bessel_i0");
    const double ax = std::abs(x);
    if (ax < detail::kI0SeriesLimit) {
        return detail::i0_series(ax);
    }
    const auto scaled = detail::i0_scaled_asymptotic(ax);
    constexpr double kLogMax = 709.782712893384;  // log(DBL_MAX)
    if (ax + std::log(scaled.value) >= kLogMax) {
        throw OverflowError("bessel_i0: I0(x) overflows double for |x| > ~713.98; "
                            "use bessel_i0_scaled");
    }
    // Split the exponential so e^x alone cannot overflow before the product.
    const double half = std::exp(0.5 * ax);
    const double value = (half * scaled.value) * half;
    const double rel = scaled.est_error / scaled.value + 4.0 * kEps;
    return {value, value * rel};
}

EvalResult erf(double x) {
    require_finite(x, "erf");
    const double r = std::erf(std::abs(x));
    return {std::signbit(x) ? -r : r, 2.0 * kEps};
}

}  // namespace kgc::specfun
