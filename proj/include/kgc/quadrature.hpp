#pragma once

#include <cstddef>
#include <functional>

namespace kgc {

enum class QuadratureMethod { adaptive_simpson, gauss_legendre };

struct QuadratureSpec {
    QuadratureMethod method = QuadratureMethod::adaptive_simpson;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::size_t max_subdivisions = std::size_t{1} << 20;  // total intervals

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    std::size_t intervals = 0;
};

using Integrand = std::function<double(double)>;

/// Integrate f over [a, b] to within max(abs_tol, rel_tol * |value|).
/// initial_panels seeds the subdivision (useful for oscillatory integrands).
/// Throws AccuracyError carrying the partial result when the interval budget
/// runs out.
QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                     std::size_t initial_panels = 1);

}  // namespace kgc
