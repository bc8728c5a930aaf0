#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace kgc {

enum class Provenance { closed_form, fdm };

std::string_view to_string(Provenance p);

/// Sampled solution u(x, t). values is row-major: one row per time.
struct Field2D {
    std::vector<double> xs;
    std::vector<double> ts;
    std::vector<double> values;
    double q_dimless = 0.0;
    Provenance provenance = Provenance::closed_form;

    Field2D() = default;
    Field2D(std::vector<double> xs_, std::vector<double> ts_, double q, Provenance prov);

    std::size_t nx() const noexcept { return xs.size(); }
    std::size_t nt() const noexcept { return ts.size(); }

    double& at(std::size_t it, std::size_t ix) { return values[it * xs.size() + ix]; }
    double at(std::size_t it, std::size_t ix) const { return values[it * xs.size() + ix]; }

    std::span<double> row(std::size_t it) { return {values.data() + it * xs.size(), xs.size()}; }
    std::span<const double> row(std::size_t it) const {
        return {values.data() + it * xs.size(), xs.size()};
    }

    /// Throws ShapeError if values does not match the grid sizes.
    void check_shape() const;
};

/// Every x_stride-th column and t_stride-th row, starting at index 0.
Field2D subsample(const Field2D& field, std::size_t x_stride, std::size_t t_stride);

/// Evenly spaced grid with count points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace kgc
