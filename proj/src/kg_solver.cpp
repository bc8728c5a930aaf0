#include "kgc/kg_solver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include "kgc/errors.hpp"
#include "kgc/specfun.hpp"

namespace kgc::solver {

namespace {

double kernel_unchecked(double q, double delta) {
    if (q > 0.0) return specfun::bessel_j0(std::sqrt(q * delta)).value;
    if (q < 0.0) return specfun::bessel_i0(std::sqrt(-q * delta)).value;
    return 1.0;
}

void require_sorted(const std::vector<double>& g, const char* name) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!std::isfinite(g[i])) throw InvalidArgument(std::string(name) + " grid must be finite");
        if (i > 0 && g[i] < g[i - 1]) throw InvalidArgument(std::string(name) + " grid must be sorted");
    }
}

struct PointFailure {
    double x = 0.0;
    double t = 0.0;
    double estimate = 0.0;
    double bound = 0.0;
    std::string what;
};

}  // namespace

double kernel(double q_dimless, double delta) {
    if (!(delta >= 0.0)) throw DomainError("kernel: delta must be >= 0 (inside the light cone)");
    if (!std::isfinite(q_dimless)) throw DomainError("kernel: q must be finite");
    return kernel_unchecked(q_dimless, delta);
}

double solve_point(double x, double t, double q_dimless, const InitialCondition& ic,
                   const QuadratureSpec& quad) {
    if (!std::isfinite(x) || !std::isfinite(t)) throw DomainError("solve_point: x and t must be finite");
    if (t < 0.0) throw DomainError("solve_point: t must be >= 0 (forward evolution only)");
    if (!std::isfinite(q_dimless)) throw DomainError("solve_point: q must be finite");
    quad.validate();
    if (t == 0.0) return 0.0;

    double lo = x - t;
    double hi = x + t;
    if (const auto s = ic.support()) {
        lo = std::max(lo, s->lo);
        hi = std::min(hi, s->hi);
        if (!(lo < hi)) return 0.0;
    }

    std::vector<double> cuts{lo};
    for (double b : ic.breakpoints()) {
        if (b > lo && b < hi) cuts.push_back(b);
    }
    cuts.push_back(hi);

    const auto integrand = [&](double z) {
        const double s = z - x;
        const double delta = std::max(0.0, (t - s) * (t + s));
        return ic(z) * kernel_unchecked(q_dimless, delta);
    };

    const double total = hi - lo;
    const double rate = 1.0 + std::sqrt(std::abs(q_dimless));
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double len = cuts[k + 1] - cuts[k];
        QuadratureSpec piece = quad;
        piece.abs_tol = quad.abs_tol * len / total;
        const auto panels = static_cast<std::size_t>(std::max(4.0, std::ceil(len * rate)));
        sum += integrate(integrand, cuts[k], cuts[k + 1], piece, panels).value;
    }
    return 0.5 * sum;
}

double solve_point(double x, double t, const physics::ReducedParams& params, const InitialCondition& ic,
                   const QuadratureSpec& quad) {
    return solve_point(x, t, params.q_dimless, ic, quad);
}

Field2D solve_grid(const std::vector<double>& xs, const std::vector<double>& ts, double q_dimless,
                   const InitialCondition& ic, const QuadratureSpec& quad, unsigned threads) {
    require_sorted(xs, "x");
    require_sorted(ts, "t");
    if (xs.empty() || ts.empty()) throw InvalidArgument("solve_grid: grids must be non-empty");
    if (ts.front() < 0.0) throw DomainError("solve_grid: t must be >= 0");
    quad.validate();

    Field2D field(xs, ts, q_dimless, Provenance::closed_form);
    const std::size_t rows = ts.size();
    std::vector<std::optional<PointFailure>> failures(rows);
    std::vector<std::exception_ptr> errors(rows);

    const auto run_row = [&](std::size_t i) {
        try {
            for (std::size_t j = 0; j < xs.size(); ++j) {
                try {
                    field.at(i, j) = solve_point(xs[j], ts[i], q_dimless, ic, quad);
                } catch (const AccuracyError& e) {
                    field.at(i, j) = e.best_estimate();
                    auto& worst = failures[i];
                    if (!worst || e.error_bound() > worst->bound) {
                        worst = PointFailure{xs[j], ts[i], e.best_estimate(), e.error_bound(), e.what()};
                    }
                }
            }
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows));
    if (threads <= 1) {
        for (std::size_t i = 0; i < rows; ++i) run_row(i);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < rows; i += threads) run_row(i);
            });
        }
    }

    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    const PointFailure* worst = nullptr;
    for (const auto& f : failures) {
        if (f && (!worst || f->bound > worst->bound)) worst = &*f;
    }
    if (worst) {
        std::ostringstream os;
        os.precision(12);
        os << "quadrature did not converge; worst point x=" << worst->x << " t=" << worst->t
           << " estimate=" << worst->estimate << " error_bound=" << worst->bound << " (" << worst->what
           << ")";
        throw AccuracyError(os.str(), worst->estimate, worst->bound);
    }
    return field;
}

Field2D solve_grid(const std::vector<double>& xs, const std::vector<double>& ts,
                   const physics::ReducedParams& params, const InitialCondition& ic,
                   const QuadratureSpec& quad, unsigned threads) {
    return solve_grid(xs, ts, params.q_dimless, ic, quad, threads);
}

}  // namespace kgc::solver
