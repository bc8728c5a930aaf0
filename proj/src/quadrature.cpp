#include "kgc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "kgc/errors.hpp"

namespace kgc {

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw InvalidArgument("quadrature tolerances must be > 0");
    if (max_subdivisions < 1) throw InvalidArgument("max_subdivisions must be >= 1");
}

namespace {

struct Panel {
    double a, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

class AdaptiveSimpson {
public:
    AdaptiveSimpson(const Integrand& f, double a, double b, const QuadratureSpec& spec, std::size_t panels)
        : f_(f), a_(a), b_(b), spec_(spec), panels_(panels) {}

    QuadResult run() {
        seed();
        double estimate = 0.0;
        for (const auto& p : seeds_) estimate += p.whole;
        double eps = std::max(spec_.abs_tol, spec_.rel_tol * std::abs(estimate));
        QuadResult r = sweep(eps);
        // The relative target depends on the final value; tighten if the seed
        // estimate overstated it.
        for (int pass = 0; pass < 4; ++pass) {
            const double target = std::max(spec_.abs_tol, spec_.rel_tol * std::abs(r.value));
            if (r.est_error <= target) break;
            eps = 0.5 * target;
            r = sweep(eps);
        }
        r.intervals = used_;
        return r;
    }

private:
    void seed() {
        const double h = (b_ - a_) / static_cast<double>(panels_);
        double x0 = a_;
        double f0 = f_(a_);
        for (std::size_t i = 0; i < panels_; ++i) {
            const double x1 = (i + 1 == panels_) ? b_ : a_ + h * static_cast<double>(i + 1);
            const double xm = 0.5 * (x0 + x1);
            const double fm = f_(xm);
            const double f1 = f_(x1);
            seeds_.push_back({x0, x1, f0, fm, f1, simpson(x0, x1, f0, fm, f1)});
            x0 = x1;
            f0 = f1;
        }
        used_ = panels_;
    }

    QuadResult sweep(double eps) {
        const double width = b_ - a_;
        std::vector<Panel> stack(seeds_.rbegin(), seeds_.rend());
        double sum = 0.0;
        double err = 0.0;
        while (!stack.empty()) {
            const Panel p = stack.back();
            stack.pop_back();
            const double m = 0.5 * (p.a + p.b);
            const double lm = 0.5 * (p.a + m);
            const double rm = 0.5 * (m + p.b);
            const double flm = f_(lm);
            const double frm = f_(rm);
            const double left = simpson(p.a, m, p.fa, flm, p.fm);
            const double right = simpson(m, p.b, p.fm, frm, p.fb);
            const double diff = left + right - p.whole;
            const double local_eps = eps * (p.b - p.a) / width;
            const bool unsplittable = !(lm > p.a && rm < p.b) || (p.b - p.a) < 1e-14 * width;
            if (std::abs(diff) <= 15.0 * local_eps || unsplittable) {
                sum += left + right + diff / 15.0;
                err += std::abs(diff) / 15.0;
                continue;
            }
            if (used_ + 1 > spec_.max_subdivisions) {
                double partial = sum + left + right;
                double bound = err + std::abs(diff);
                for (const auto& q : stack) {
                    partial += q.whole;
                    bound += std::abs(q.whole);
                }
                std::ostringstream os;
                os << "adaptive Simpson exhausted " << spec_.max_subdivisions
                   << " intervals on [" << a_ << ", " << b_ << "]; estimate " << partial
                   << " +/- " << bound;
                throw AccuracyError(os.str(), partial, bound);
            }
            ++used_;
            stack.push_back({m, p.b, p.fm, frm, p.fb, right});
            stack.push_back({p.a, m, p.fa, flm, p.fm, left});
        }
        return {sum, err, used_};
    }

    const Integrand& f_;
    double a_, b_;
    const QuadratureSpec& spec_;
    std::size_t panels_;
    std::vector<Panel> seeds_;
    std::size_t used_ = 0;
};

constexpr int kGaussOrder = 10;

struct GaussRule {
    std::array<double, kGaussOrder> nodes{};
    std::array<double, kGaussOrder> weights{};
};

// Nodes and weights on [-1, 1] from Newton iteration on P_n.
GaussRule make_gauss_rule() {
    GaussRule rule;
    constexpr int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& gauss_rule() {
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

double composite_gauss(const Integrand& f, double a, double b, std::size_t panels) {
    const auto& rule = gauss_rule();
    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + h * static_cast<double>(p);
        const double c = lo + 0.5 * h;
        double s = 0.0;
        for (int i = 0; i < kGaussOrder; ++i) {
            s += rule.weights[i] * f(c + 0.5 * h * rule.nodes[i]);
        }
        sum += 0.5 * h * s;
    }
    return sum;
}

QuadResult gauss_legendre(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                          std::size_t panels) {
    double coarse = composite_gauss(f, a, b, panels);
    std::size_t used = panels;
    for (;;) {
        const std::size_t fine_panels = 2 * panels;
        if (used + fine_panels > spec.max_subdivisions) {
            std::ostringstream os;
            os << "composite Gauss-Legendre exhausted " << spec.max_subdivisions
               << " panels on [" << a << ", " << b << "]";
            throw AccuracyError(os.str(), coarse, std::abs(coarse));
        }
        const double fine = composite_gauss(f, a, b, fine_panels);
        used += fine_panels;
        const double diff = std::abs(fine - coarse);
        if (diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(fine))) {
            return {fine, diff, used};
        }
        coarse = fine;
        panels = fine_panels;
    }
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                     std::size_t initial_panels) {
    spec.validate();
    if (!(a <= b)) throw InvalidArgument("integrate: requires a <= b");
    if (a == b) return {0.0, 0.0, 0};
    initial_panels = std::max<std::size_t>(1, initial_panels);
    if (initial_panels > spec.max_subdivisions) initial_panels = spec.max_subdivisions;
    if (spec.method == QuadratureMethod::gauss_legendre) {
        return gauss_legendre(f, a, b, spec, initial_panels);
    }
    return AdaptiveSimpson(f, a, b, spec, initial_panels).run();
}

}  // namespace kgc
