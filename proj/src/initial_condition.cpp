#include "kgc/initial_condition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kgc/errors.hpp"

namespace kgc {

InitialCondition InitialCondition::gaussian() {
    InitialCondition ic;
    ic.kind_ = Kind::gaussian;
    return ic;
}

InitialCondition InitialCondition::bump(double center, double half_width) {
    if (!std::isfinite(center)) throw InvalidArgument("bump center must be finite");
    if (!std::isfinite(half_width) || half_width <= 0.0) {
        throw InvalidArgument("bump half-width must be > 0");
    }
    InitialCondition ic;
    ic.kind_ = Kind::bump;
    ic.center_ = center;
    ic.half_width_ = half_width;
    return ic;
}

InitialCondition InitialCondition::tabulated(std::vector<double> xs, std::vector<double> fs) {
    if (xs.size() != fs.size()) throw InvalidArgument("tabulated ic: x and f lengths differ");
    if (xs.size() < 2) throw InvalidArgument("tabulated ic needs at least two samples");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(fs[i])) {
            throw InvalidArgument("tabulated ic: samples must be finite");
        }
        if (i > 0 && !(xs[i] > xs[i - 1])) {
            throw InvalidArgument("tabulated ic: x must be strictly increasing");
        }
    }
    InitialCondition ic;
    ic.kind_ = Kind::tabulated;
    ic.table_x_ = std::move(xs);
    ic.table_f_ = std::move(fs);
    return ic;
}

double InitialCondition::operator()(double x) const {
    switch (kind_) {
        case Kind::gaussian:
            return std::exp(-x * x);
        case Kind::bump: {
            const double s = (x - center_) / half_width_;
            const double s2 = s * s;
            if (s2 >= 1.0) return 0.0;
            return std::exp(1.0 - 1.0 / (1.0 - s2));
        }
        case Kind::tabulated: {
            if (x < table_x_.front() || x > table_x_.back()) return 0.0;
            auto it = std::upper_bound(table_x_.begin(), table_x_.end(), x);
            if (it == table_x_.end()) return table_f_.back();
            const auto hi = static_cast<std::size_t>(it - table_x_.begin());
            const auto lo = hi - 1;
            const double w = (x - table_x_[lo]) / (table_x_[hi] - table_x_[lo]);
            return (1.0 - w) * table_f_[lo] + w * table_f_[hi];
        }
    }
    return 0.0;
}

std::optional<Interval> InitialCondition::support() const {
    switch (kind_) {
        case Kind::gaussian:
            return std::nullopt;
        case Kind::bump:
            return Interval{center_ - half_width_, center_ + half_width_};
        case Kind::tabulated:
            return Interval{table_x_.front(), table_x_.back()};
    }
    return std::nullopt;
}

Interval InitialCondition::effective_support(double cutoff) const {
    if (auto s = support()) return *s;
    if (!(cutoff > 0.0 && cutoff < 1.0)) throw InvalidArgument("cutoff must lie in (0, 1)");
    const double r = std::sqrt(-std::log(cutoff));
    return {-r, r};
}

std::string InitialCondition::describe() const {
    std::ostringstream os;
    os.precision(12);
    switch (kind_) {
        case Kind::gaussian:
            os << "gaussian f(x)=exp(-x^2)";
            break;
        case Kind::bump:
            os << "bump center=" << center_ << " half_width=" << half_width_;
            break;
        case Kind::tabulated:
            os << "tabulated n=" << table_x_.size() << " range=[" << table_x_.front() << ","
               << table_x_.back() << "] interp=linear";
            break;
    }
    return os.str();
}

}  // namespace kgc
