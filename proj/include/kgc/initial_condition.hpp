#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kgc {

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Cauchy datum f(x) = u_t(x, 0) (with u(x, 0) = 0).
///
///   gaussian   f(x) = exp(-x^2)
///   bump       f(x) = exp(1 - 1/(1 - s^2)), s = (x - center)/half_width, zero for |s| >= 1
///   tabulated  linear interpolation of (x, f) samples, zero outside the table
class InitialCondition {
public:
    enum class Kind { gaussian, bump, tabulated };

    static InitialCondition gaussian();
    static InitialCondition bump(double center, double half_width);
    /// xs must be strictly increasing with at least two samples.
    static InitialCondition tabulated(std::vector<double> xs, std::vector<double> fs);

    double operator()(double x) const;

    Kind kind() const noexcept { return kind_; }

    /// Exact support for bump/tabulated; nullopt for the gaussian.
    std::optional<Interval> support() const;

    /// Interval outside which |f| < cutoff. Used to size FDM domains.
    Interval effective_support(double cutoff = kGaussianCutoff) const;

    /// Points where f is not smooth (table nodes), sorted.
    const std::vector<double>& breakpoints() const noexcept { return table_x_; }

    std::string describe() const;

    static constexpr double kGaussianCutoff = 1e-6;

private:
    InitialCondition() = default;

    Kind kind_ = Kind::gaussian;
    double center_ = 0.0;
    double half_width_ = 1.0;
    std::vector<double> table_x_;
    std::vector<double> table_f_;
};

}  // namespace kgc
