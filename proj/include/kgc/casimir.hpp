#pragma once

// Physics layer: Casimir force and potential between parallel plates, the
// q-parameter of the reduced thermal Klein-Gordon equation, the relaxation
// time, and the map into the dimensionless variables used by the solvers.
// Everything here is SI.
//
// Thermal Klein-Gordon equation (1D) with the potential acting on T:
//
//     (1/v^2) T_tt - T_xx + (m/hbar) T_t + (2 V m / hbar^2) T = 0.
//
// Writing T = exp(-t/(2 tau)) u and collecting the u_t terms gives
//
//     u_t * ( -1/(v^2 tau) + m/hbar ),
//
// which vanishes only for tau = hbar / (m v^2). With that tau the remaining
// u coefficient is
//
//     1/(4 v^2 tau^2) - m/(2 hbar tau) + 2 V m / hbar^2
//       = m^2 v^2 / (4 hbar^2) - m^2 v^2 / (2 hbar^2) + 2 V m / hbar^2
//       = 2 V m / hbar^2 - (m v / (2 hbar))^2  =  q,
//
// leaving (1/v^2) u_tt - u_xx + q u = 0.

namespace kgc::physics {

struct PhysicalConstants {
    double hbar = 1.054571817e-34;  // J s
    double c = 2.99792458e8;        // m/s
    double mass = 9.1093837015e-31; // kg, electron by default

    /// Throws DomainError unless all fields are positive and finite.
    void validate() const;
};

enum class CasimirSign : int { attractive = -1, repulsive = +1 };

struct CasimirModel {
    CasimirSign sign = CasimirSign::repulsive;
    double effective_area = 1e-18;  // m^2 (1 nm^2)

    void validate() const;
};

/// Reduced-equation parameters. The dimensionless variables are
/// x~ = x / length_scale and t~ = velocity * t / length_scale, so the signal
/// speed is 1 and q_dimless = q_phys * length_scale^2.
struct ReducedParams {
    double q_phys = 0.0;       // m^-2
    double velocity = 0.0;     // m/s
    double length_scale = 0.0; // m
    double q_dimless = 0.0;
};

/// Parallel-plate Casimir force -pi^2 hbar c A / (240 d^4). Always attractive.
double casimir_force(double d, double area, const PhysicalConstants& consts = {});

/// sign * pi^2 hbar c A_eff / (720 d^3). For the attractive model -dV/dd
/// reproduces casimir_force with A = A_eff.
double casimir_potential(double d, const CasimirModel& model, const PhysicalConstants& consts = {});

/// q = 2 V m / hbar^2 - (m v / (2 hbar))^2, in m^-2.
double q_parameter(double potential, double velocity, const PhysicalConstants& consts = {});

/// q at plate separation d, chaining casimir_potential into q_parameter.
double q_at_separation(double d, const CasimirModel& model, double velocity,
                       const PhysicalConstants& consts = {});

/// tau = hbar / (m v^2); see the derivation at the top of this header.
double relaxation_time(double velocity, const PhysicalConstants& consts = {});

inline constexpr double kDefaultPulseRatio = 0.1;

/// True when pulse_duration <= ratio_max * tau (boundary inclusive), i.e. the
/// damping factor exp(-t/(2 tau)) is negligible over the pulse and T ~ u.
bool pulse_regime_ok(double pulse_duration, double tau, double ratio_max = kDefaultPulseRatio);

inline constexpr double kDefaultRootTol = 1e-13;  // m (1e-4 nm)

/// Plate separation where q changes sign, found by bisection on [d_lo, d_hi].
/// q is strictly decreasing in d for the repulsive model, so the root is unique.
/// Returns the midpoint of a final bracket no wider than tol.
/// Throws UnsupportedModelError for the attractive model and BracketError when
/// q does not change sign over the bracket.
double find_sign_change(const CasimirModel& model, double velocity, const PhysicalConstants& consts,
                        double d_lo, double d_hi, double tol = kDefaultRootTol);

ReducedParams to_dimensionless(double q_phys, double velocity, double length_scale);

/// Coefficients of the damped equation in dimensionless variables:
///   T_tt + damping * T_t - T_xx + potential * T = 0,
/// with damping = m v L / hbar and potential = 2 V m L^2 / hbar^2. The
/// reduced q_dimless equals potential - damping^2 / 4, and the decay factor
/// exp(-t/(2 tau)) becomes exp(-damping * t~ / 2).
struct DampedCoefficients {
    double damping = 0.0;
    double potential = 0.0;

    double reduced_q() const { return potential - 0.25 * damping * damping; }
};

DampedCoefficients damped_dimensionless(double potential, double velocity, double length_scale,
                                        const PhysicalConstants& consts = {});

}  // namespace kgc::physics
