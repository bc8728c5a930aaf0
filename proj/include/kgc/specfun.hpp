#pragma once

// Special functions needed by the Bessel-kernel solutions: J0, I0 (plain and
// exponentially scaled) and erf. Pure functions, no state.

namespace kgc::specfun {

struct EvalResult {
    double value = 0.0;
    double est_error = 0.0;  // conservative absolute error bound
};

/// Bessel function of the first kind, order zero. Accurate to 1e-12 absolute
/// for |x| <= 1e4. Throws InvalidArgument for non-finite x.
EvalResult bessel_j0(double x);

/// Modified Bessel function I0. Accurate to 1e-12 relative for |x| <= 700.
/// Throws OverflowError once I0(x) exceeds the double range (|x| > ~713.98);
/// use bessel_i0_scaled there.
EvalResult bessel_i0(double x);

/// exp(-x) * I0(x) for x >= 0. Never overflows.
EvalResult bessel_i0_scaled(double x);

/// Error function. Odd symmetry is exact.
EvalResult erf(double x);

// Individual evaluation branches, exposed so the switch points can be
// cross-checked against each other. Arguments are assumed >= 0.
namespace detail {

inline constexpr double kJ0SeriesLimit = 8.0;
inline constexpr double kJ0RecurrenceLimit = 25.0;
inline constexpr double kI0SeriesLimit = 15.0;

EvalResult j0_series(double x);
EvalResult j0_miller(double x);
EvalResult j0_hankel(double x);
EvalResult i0_series(double x);
EvalResult i0_scaled_asymptotic(double x);

}  // namespace detail

}  // namespace kgc::specfun
