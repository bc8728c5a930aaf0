#include "kgc/field.hpp"

#include "kgc/errors.hpp"

namespace kgc {

std::string_view to_string(Provenance p) {
    return p == Provenance::fdm ? "fdm" : "closed-form";
}

Field2D::Field2D(std::vector<double> xs_, std::vector<double> ts_, double q, Provenance prov)
    : xs(std::move(xs_)), ts(std::move(ts_)), values(xs.size() * ts.size(), 0.0), q_dimless(q),
      provenance(prov) {}

void Field2D::check_shape() const {
    if (values.size() != xs.size() * ts.size()) {
        throw ShapeError("field values do not match grid dimensions");
    }
}

Field2D subsample(const Field2D& field, std::size_t x_stride, std::size_t t_stride) {
    if (x_stride == 0 || t_stride == 0) throw InvalidArgument("subsample strides must be >= 1");
    field.check_shape();
    std::vector<double> xs;
    std::vector<double> ts;
    for (std::size_t j = 0; j < field.nx(); j += x_stride) xs.push_back(field.xs[j]);
    for (std::size_t i = 0; i < field.nt(); i += t_stride) ts.push_back(field.ts[i]);
    Field2D out(std::move(xs), std::move(ts), field.q_dimless, field.provenance);
    for (std::size_t i = 0; i < out.nt(); ++i) {
        for (std::size_t j = 0; j < out.nx(); ++j) {
            out.at(i, j) = field.at(i * t_stride, j * x_stride);
        }
    }
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0) throw InvalidArgument("linspace: count must be >= 1");
    if (count == 1) return {lo};
    std::vector<double> out(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

}  // namespace kgc
