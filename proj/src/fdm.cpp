#include "kgc/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kgc/errors.hpp"

namespace kgc::fdm {

FdmGrid FdmGrid::make(double x_min, double x_max, std::size_t nx, double cfl, double t_end,
                      std::size_t store_every) {
    if (!(x_max > x_min)) throw ConfigError("fdm grid: x_max must exceed x_min");
    if (nx < 3) throw ConfigError("fdm grid: nx must be >= 3");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("fdm grid: cfl must lie in (0, 1]");
    if (!(t_end > 0.0)) throw ConfigError("fdm grid: t_end must be > 0");
    FdmGrid g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.nx = nx;
    g.cfl = cfl;
    g.dt = cfl * g.dx();
    g.nt = static_cast<std::size_t>(std::ceil(t_end / g.dt - 1e-9));
    g.store_every = std::max<std::size_t>(1, store_every);
    g.validate();
    return g;
}

void FdmGrid::validate() const {
    if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw ConfigError("fdm grid: invalid x range");
    }
    if (nx < 3) throw ConfigError("fdm grid: nx must be >= 3");
    if (nt < 1) throw ConfigError("fdm grid: nt must be >= 1");
    if (store_every < 1) throw ConfigError("fdm grid: store_every must be >= 1");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("fdm grid: cfl must lie in (0, 1]");
    if (std::abs(dt - cfl * dx()) > 1e-12 * dt) throw ConfigError("fdm grid: dt must equal cfl * dx");
}

void check_light_cone(const FdmGrid& grid, const InitialCondition& ic) {
    const Interval s = ic.effective_support();
    const double reach = grid.t_end();
    if (s.lo - reach <= grid.x_min || s.hi + reach >= grid.x_max) {
        std::ostringstream os;
        os << "fdm domain too small: light cone [" << s.lo - reach << ", " << s.hi + reach
           << "] reaches the boundary of [" << grid.x_min << ", " << grid.x_max << "]";
        throw ConfigError(os.str());
    }
}

namespace {

std::vector<double> node_positions(const FdmGrid& grid) {
    std::vector<double> xs(grid.nx);
    const double dx = grid.dx();
    for (std::size_t j = 0; j < grid.nx; ++j) xs[j] = grid.x_min + dx * static_cast<double>(j);
    xs.back() = grid.x_max;
    return xs;
}

std::vector<double> stored_times(const FdmGrid& grid) {
    std::vector<double> ts;
    for (std::size_t n = 0; n <= grid.nt; n += grid.store_every) ts.push_back(static_cast<double>(n) * grid.dt);
    return ts;
}

void check_stability(double q, const FdmGrid& grid) {
    const double q_dt2 = q * grid.dt * grid.dt;
    if (!(std::abs(q_dt2) < 4.0)) {
        throw ConfigError("fdm: |q| dt^2 must be < 4 for the explicit scheme");
    }
    if (q > 0.0 && grid.cfl * grid.cfl + 0.25 * q_dt2 > 1.0) {
        throw ConfigError("fdm: cfl^2 + q dt^2 / 4 must be <= 1 for q > 0");
    }
}

// Taylor start-up: u(dt) = dt u_t + dt^2/2 u_tt + dt^3/6 u_ttt at t = 0, with
// u_tt(0) = -damping f and u_ttt(0) = f'' + (damping^2 - potential) f.
std::vector<double> first_row(const std::vector<double>& f, const FdmGrid& grid, double damping,
                              double potential) {
    const double dt = grid.dt;
    const double dx = grid.dx();
    std::vector<double> u(grid.nx, 0.0);
    for (std::size_t j = 1; j + 1 < grid.nx; ++j) {
        const double fxx = (f[j + 1] - 2.0 * f[j] + f[j - 1]) / (dx * dx);
        u[j] = dt * f[j] - 0.5 * dt * dt * damping * f[j] +
               dt * dt * dt / 6.0 * (fxx + (damping * damping - potential) * f[j]);
    }
    return u;
}

template <class Step>
Field2D march(const InitialCondition& ic, const FdmGrid& grid, double q_report, double damping,
              double potential, Step&& step) {
    const auto xs = node_positions(grid);
    Field2D field(xs, stored_times(grid), q_report, Provenance::fdm);

    std::vector<double> f(grid.nx);
    for (std::size_t j = 0; j < grid.nx; ++j) f[j] = ic(xs[j]);
    f.front() = 0.0;
    f.back() = 0.0;

    std::vector<double> prev(grid.nx, 0.0);
    std::vector<double> curr = first_row(f, grid, damping, potential);
    std::vector<double> next(grid.nx, 0.0);

    std::size_t stored = 1;
    const auto keep = [&](std::size_t n, const std::vector<double>& u) {
        if (n % grid.store_every == 0) {
            std::copy(u.begin(), u.end(), field.row(stored).begin());
            ++stored;
        }
    };
    if (grid.nt >= 1) keep(1, curr);
    for (std::size_t n = 1; n < grid.nt; ++n) {
        step(prev, curr, next);
        keep(n + 1, next);
        std::swap(prev, curr);
        std::swap(curr, next);
    }
    return field;
}

}  // namespace

void leapfrog_step(std::span<const double> prev, std::span<const double> curr, std::span<double> next,
                   double cfl, double q_dt2) {
    const std::size_t n = curr.size();
    const double c2 = cfl * cfl;
    next[0] = 0.0;
    next[n - 1] = 0.0;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        next[j] = 2.0 * curr[j] - prev[j] + c2 * (curr[j + 1] - 2.0 * curr[j] + curr[j - 1]) -
                  q_dt2 * curr[j];
    }
}

Field2D fdm_solve(double q_dimless, const InitialCondition& ic, const FdmGrid& grid) {
    grid.validate();
    if (!std::isfinite(q_dimless)) throw ConfigError("fdm: q must be finite");
    check_stability(q_dimless, grid);
    check_light_cone(grid, ic);
    const double q_dt2 = q_dimless * grid.dt * grid.dt;
    return march(ic, grid, q_dimless, 0.0, q_dimless,
                 [&](const std::vector<double>& prev, const std::vector<double>& curr, std::vector<double>& next) {
                     leapfrog_step(prev, curr, next, grid.cfl, q_dt2);
                 });
}

Field2D fdm_solve_damped(const physics::DampedCoefficients& coeffs, const InitialCondition& ic,
                         const FdmGrid& grid) {
    grid.validate();
    if (!std::isfinite(coeffs.damping) || !std::isfinite(coeffs.potential) || coeffs.damping < 0.0) {
        throw ConfigError("fdm: damping must be finite and >= 0, potential finite");
    }
    check_stability(coeffs.potential, grid);
    check_light_cone(grid, ic);
    const double dt = grid.dt;
    const double c2 = grid.cfl * grid.cfl;
    const double k_dt2 = coeffs.potential * dt * dt;
    const double a_plus = 1.0 + 0.5 * coeffs.damping * dt;
    const double a_minus = 1.0 - 0.5 * coeffs.damping * dt;
    return march(ic, grid, coeffs.reduced_q(), coeffs.damping, coeffs.potential,
                 [&](const std::vector<double>& prev, const std::vector<double>& curr, std::vector<double>& next) {
                     const std::size_t n = curr.size();
                     next[0] = 0.0;
                     next[n - 1] = 0.0;
                     for (std::size_t j = 1; j + 1 < n; ++j) {
                         const double rhs = 2.0 * curr[j] - a_minus * prev[j] +
                                            c2 * (curr[j + 1] - 2.0 * curr[j] + curr[j - 1]) - k_dt2 * curr[j];
                         next[j] = rhs / a_plus;
                     }
                 });
}

std::vector<double> discrete_energy(const Field2D& field, double q_dimless) {
    field.check_shape();
    const std::size_t nt = field.nt();
    const std::size_t nx = field.nx();
    if (nt < 2) throw InvalidArgument("discrete_energy: need at least two time rows");
    if (nx < 2) throw InvalidArgument("discrete_energy: need at least two x nodes");

    std::vector<double> energy(nt, 0.0);
    for (std::size_t i = 0; i < nt; ++i) {
        const std::size_t lo = (i == 0) ? 0 : i - 1;
        const std::size_t hi = (i + 1 == nt) ? i : i + 1;
        const double span_t = field.ts[hi] - field.ts[lo];
        double kinetic = 0.0;
        double mass = 0.0;
        for (std::size_t j = 0; j < nx; ++j) {
            const double w = (j == 0 || j + 1 == nx) ? 0.5 : 1.0;
            const double ut = (field.at(hi, j) - field.at(lo, j)) / span_t;
            const double u = field.at(i, j);
            const double dxw = w * ((j + 1 < nx) ? field.xs[j + 1] - field.xs[j] : field.xs[j] - field.xs[j - 1]);
            kinetic += dxw * ut * ut;
            mass += dxw * u * u;
        }
        double gradient = 0.0;
        for (std::size_t j = 0; j + 1 < nx; ++j) {
            const double h = field.xs[j + 1] - field.xs[j];
            const double ux = (field.at(i, j + 1) - field.at(i, j)) / h;
            gradient += h * ux * ux;
        }
        energy[i] = 0.5 * (kinetic + gradient + q_dimless * mass);
    }
    return energy;
}

std::vector<double> scheme_energy(const Field2D& field, double q_dimless, const FdmGrid& grid) {
    field.check_shape();
    grid.validate();
    const std::size_t nt = field.nt();
    const std::size_t nx = field.nx();
    if (nt < 2) throw InvalidArgument("scheme_energy: need at least two time rows");
    if (grid.store_every != 1 || nx != grid.nx || nt != grid.nt + 1) {
        throw InvalidArgument("scheme_energy: field must hold every step of the given grid");
    }
    const double dt = grid.dt;
    const double dx = grid.dx();

    std::vector<double> energy(nt - 1, 0.0);
    for (std::size_t i = 0; i + 1 < nt; ++i) {
        const auto a = field.row(i);
        const auto b = field.row(i + 1);
        double kinetic = 0.0;
        double gradient = 0.0;
        double mass = 0.0;
        for (std::size_t j = 0; j < nx; ++j) {
            const double ut = (b[j] - a[j]) / dt;
            kinetic += ut * ut;
            mass += b[j] * a[j];
            if (j + 1 < nx) gradient += (b[j + 1] - b[j]) * (a[j + 1] - a[j]) / (dx * dx);
        }
        energy[i] = 0.5 * dx * (kinetic + gradient + q_dimless * mass);
    }
    return energy;
}

double energy_drift(const std::vector<double>& energies) {
    if (energies.size() < 3) throw InvalidArgument("energy_drift: need at least three rows");
    const double ref = energies[1];
    if (ref == 0.0) return 0.0;
    double worst = 0.0;
    for (std::size_t n = 1; n + 1 < energies.size(); ++n) {
        worst = std::max(worst, std::abs(energies[n] - ref) / std::abs(ref));
    }
    return worst;
}

FieldNorms compare_fields(const Field2D& a, const Field2D& b) {
    a.check_shape();
    b.check_shape();
    if (a.xs != b.xs || a.ts != b.ts) throw ShapeError("compare_fields: grids differ");
    FieldNorms n;
    double max_a = 0.0;
    double sq = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        const double d = std::abs(a.values[k] - b.values[k]);
        n.max_abs = std::max(n.max_abs, d);
        max_a = std::max(max_a, std::abs(a.values[k]));
        sq += d * d;
    }
    n.rms = a.values.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(a.values.size()));
    if (max_a > 0.0) {
        n.rel_max_abs = n.max_abs / max_a;
    } else {
        n.rel_max_abs = n.max_abs == 0.0 ? 0.0 : HUGE_VAL;
    }
    return n;
}

}  // namespace kgc::fdm
