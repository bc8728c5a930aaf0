#pragma once

#include <cstddef>
#include <vector>

#include "kgc/casimir.hpp"
#include "kgc/field.hpp"
#include "kgc/initial_condition.hpp"
#include "kgc/quadrature.hpp"

// Closed-form Cauchy solution of u_tt - u_xx + q u = 0 (unit signal speed)
// with u(x, 0) = 0 and u_t(x, 0) = f(x):
//
//     u(x, t) = 1/2 * integral_{x-t}^{x+t} f(z) K(q, t^2 - (x - z)^2) dz,
//
//     K = J0(sqrt(q * delta))   for q > 0
//     K = I0(sqrt(-q * delta))  for q < 0
//     K = 1                     for q = 0  (d'Alembert).
//
// K is an entire function of q * delta, so the integrand stays smooth up to
// the ends of the domain of dependence.

namespace kgc::solver {

/// Riemann-function kernel. Throws DomainError for delta < 0.
double kernel(double q_dimless, double delta);

/// u(x, t). Returns exactly 0 for t = 0 and whenever [x - t, x + t] misses
/// the support of a compact initial condition. Throws DomainError for t < 0
/// and AccuracyError when the quadrature budget runs out.
double solve_point(double x, double t, const physics::ReducedParams& params,
                   const InitialCondition& ic, const QuadratureSpec& quad = {});

/// Same as solve_point with only q_dimless given.
double solve_point(double x, double t, double q_dimless, const InitialCondition& ic,
                   const QuadratureSpec& quad = {});

/// values[i][j] = u(xs[j], ts[i]). Points are independent; `threads` > 1
/// spreads rows over worker threads with bitwise-identical results
/// (0 picks the hardware concurrency). On quadrature failure the
/// AccuracyError reports the point with the largest error bound.
Field2D solve_grid(const std::vector<double>& xs, const std::vector<double>& ts,
                   const physics::ReducedParams& params, const InitialCondition& ic,
                   const QuadratureSpec& quad = {}, unsigned threads = 1);

Field2D solve_grid(const std::vector<double>& xs, const std::vector<double>& ts, double q_dimless,
                   const InitialCondition& ic, const QuadratureSpec& quad = {}, unsigned threads = 1);

}  // namespace kgc::solver
