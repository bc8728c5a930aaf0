#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kgc/casimir.hpp"
#include "kgc/field.hpp"
#include "kgc/initial_condition.hpp"

// Explicit leapfrog solver for u_tt - u_xx + q u = 0 with u(x,0) = 0 and
// u_t(x,0) = f(x), used as an independent check on the closed-form solution.
// Boundaries are held at zero; the domain must be large enough that the
// light cone from the initial support never reaches them.

namespace kgc::fdm {

struct FdmGrid {
    double x_min = -6.0;
    double x_max = 6.0;
    std::size_t nx = 4001;
    double dt = 0.0;
    std::size_t nt = 0;
    double cfl = 0.5;
    std::size_t store_every = 1;  // keep every k-th time row (row 0 always kept)

    double dx() const { return (x_max - x_min) / static_cast<double>(nx - 1); }
    double t_end() const { return static_cast<double>(nt) * dt; }

    /// dt = cfl * dx, nt = smallest step count reaching t_end.
    static FdmGrid make(double x_min, double x_max, std::size_t nx, double cfl, double t_end,
                        std::size_t store_every = 1);

    /// Throws ConfigError unless nx >= 3, nt >= 1, 0 < cfl <= 1 and dt == cfl * dx.
    void validate() const;
};

/// Throws ConfigError when the cone |x - support| <= t_end reaches a boundary.
void check_light_cone(const FdmGrid& grid, const InitialCondition& ic);

/// Leapfrog solve of the reduced equation. Stability requires
/// |q| dt^2 < 4 and, for q > 0, cfl^2 + q dt^2 / 4 <= 1.
Field2D fdm_solve(double q_dimless, const InitialCondition& ic, const FdmGrid& grid);

/// Leapfrog solve of the damped equation
///   T_tt + damping T_t - T_xx + potential T = 0
/// with the same Cauchy data. The damping term uses a centred difference.
Field2D fdm_solve_damped(const physics::DampedCoefficients& coeffs, const InitialCondition& ic,
                         const FdmGrid& grid);

/// next = 2 curr - prev + cfl^2 (D2 curr) - q dt^2 curr on interior points.
/// Running it with prev and next swapped steps the scheme backwards.
void leapfrog_step(std::span<const double> prev, std::span<const double> curr, std::span<double> next,
                   double cfl, double q_dt2);

/// Energy 1/2 * integral (u_t^2 + u_x^2 + q u^2) dx per stored time row
/// (trapezoid in x, centred time differences on interior rows, one-sided at
/// the ends). Throws InvalidArgument for fewer than two rows.
std::vector<double> discrete_energy(const Field2D& field, double q_dimless);

/// Energy the leapfrog scheme conserves exactly, on half steps n + 1/2:
///   1/2 sum dx [ ((u^{n+1} - u^n)/dt)^2 + D+u^{n+1} D+u^n + q u^{n+1} u^n ].
/// Needs every step stored (store_every = 1) and zero boundary values.
/// Entry k belongs to t = (k + 1/2) dt.
std::vector<double> scheme_energy(const Field2D& field, double q_dimless, const FdmGrid& grid);

/// max_n |E_n - E_1| / |E_1| over the interior rows 1 .. nt-2.
double energy_drift(const std::vector<double>& energies);

struct FieldNorms {
    double max_abs = 0.0;
    double rel_max_abs = 0.0;  // max_abs / max|a|
    double rms = 0.0;
};

/// Norms of a - b. Throws ShapeError unless both fields share the same grid.
FieldNorms compare_fields(const Field2D& a, const Field2D& b);

}  // namespace kgc::fdm
