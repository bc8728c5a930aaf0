#include "kgc/casimir.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kgc/errors.hpp"

namespace kgc::physics {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require_velocity(double velocity, const PhysicalConstants& consts) {
    if (!(velocity > 0.0 && velocity < consts.c)) {
        std::ostringstream os;
        os << "velocity must lie in (0, c); got " << velocity << " m/s";
        throw DomainError(os.str());
    }
}

}  // namespace

void PhysicalConstants::validate() const {
    if (!positive_finite(hbar)) throw DomainError("hbar must be positive and finite");
    if (!positive_finite(c)) throw DomainError("c must be positive and finite");
    if (!positive_finite(mass)) throw DomainError("mass must be positive and finite");
}

void CasimirModel::validate() const {
    if (!positive_finite(effective_area)) {
        throw DomainError("effective_area must be positive and finite");
    }
    if (sign != CasimirSign::attractive && sign != CasimirSign::repulsive) {
        throw DomainError("Casimir sign must be +1 or -1");
    }
}

double casimir_force(double d, double area, const PhysicalConstants& consts) {
    if (!positive_finite(d)) throw DomainError("plate separation d must be > 0");
    if (!positive_finite(area)) throw DomainError("plate area must be > 0");
    consts.validate();
    const double d2 = d * d;
    return -kPi2 * consts.hbar * consts.c * area / (240.0 * d2 * d2);
}

double casimir_potential(double d, const CasimirModel& model, const PhysicalConstants& consts) {
    if (!positive_finite(d)) throw DomainError("plate separation d must be > 0");
    model.validate();
    consts.validate();
    const double magnitude = kPi2 * consts.hbar * consts.c * model.effective_area / (720.0 * d * d * d);
    return static_cast<int>(model.sign) * magnitude;
}

double q_parameter(double potential, double velocity, const PhysicalConstants& consts) {
    consts.validate();
    require_velocity(velocity, consts);
    const double coupling = 2.0 * potential * consts.mass / (consts.hbar * consts.hbar);
    const double k = consts.mass * velocity / (2.0 * consts.hbar);
    return coupling - k * k;
}

double q_at_separation(double d, const CasimirModel& model, double velocity,
                       const PhysicalConstants& consts) {
    return q_parameter(casimir_potential(d, model, consts), velocity, consts);
}

double relaxation_time(double velocity, const PhysicalConstants& consts) {
    consts.validate();
    require_velocity(velocity, consts);
    return consts.hbar / (consts.mass * velocity * velocity);
}

bool pulse_regime_ok(double pulse_duration, double tau, double ratio_max) {
    if (!positive_finite(pulse_duration)) throw DomainError("pulse duration must be > 0");
    if (!positive_finite(tau)) throw DomainError("relaxation time must be > 0");
    if (!positive_finite(ratio_max)) throw DomainError("ratio_max must be > 0");
    return pulse_duration <= ratio_max * tau;
}

double find_sign_change(const CasimirModel& model, double velocity, const PhysicalConstants& consts,
                        double d_lo, double d_hi, double tol) {
    model.validate();
    if (model.sign != CasimirSign::repulsive) {
        throw UnsupportedModelError(
            "attractive Casimir model: V < 0 keeps q < 0 for every separation, no sign change");
    }
    if (!positive_finite(d_lo) || !(d_hi > d_lo) || !std::isfinite(d_hi)) {
        throw DomainError("bracket must satisfy 0 < d_lo < d_hi");
    }
    if (!positive_finite(tol)) throw DomainError("tol must be > 0");

    const double q_lo = q_at_separation(d_lo, model, velocity, consts);
    const double q_hi = q_at_separation(d_hi, model, velocity, consts);
    if (!(q_lo > 0.0 && q_hi < 0.0)) {
        std::ostringstream os;
        os << "q does not change sign on [" << d_lo << ", " << d_hi << "] m: q(lo)=" << q_lo
           << ", q(hi)=" << q_hi;
        throw BracketError(os.str());
    }

    double lo = d_lo;
    double hi = d_hi;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double q_mid = q_at_separation(mid, model, velocity, consts);
        if (q_mid == 0.0) return mid;
        if (q_mid > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ReducedParams to_dimensionless(double q_phys, double velocity, double length_scale) {
    if (!positive_finite(length_scale)) throw DomainError("length_scale must be > 0");
    if (!positive_finite(velocity)) throw DomainError("velocity must be > 0");
    if (!std::isfinite(q_phys)) throw DomainError("q must be finite");
    return {q_phys, velocity, length_scale, q_phys * length_scale * length_scale};
}

DampedCoefficients damped_dimensionless(double potential, double velocity, double length_scale,
                                        const PhysicalConstants& consts) {
    consts.validate();
    require_velocity(velocity, consts);
    if (!positive_finite(length_scale)) throw DomainError("length_scale must be > 0");
    const double damping = consts.mass * velocity * length_scale / consts.hbar;
    const double coupling =
        2.0 * potential * consts.mass * length_scale * length_scale / (consts.hbar * consts.hbar);
    return {damping, coupling};
}

}  // namespace kgc::physics
