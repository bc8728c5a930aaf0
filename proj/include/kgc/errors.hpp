#pragma once

#include <stdexcept>
#include <string>

namespace kgc {

// Error hierarchy. The CLI maps each family onto a stable exit code:
//   InvalidArgument / DomainError / ConfigError / ShapeError -> 2
//   BracketError / UnsupportedModelError                     -> 3
//   AccuracyError                                            -> 4

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result would not be representable (e.g. I0 beyond ~713.98).
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Inconsistent solver setup (stability bound, light cone reaches boundary, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fields or grids whose shapes disagree.
class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadrature did not reach its tolerance within the subdivision budget.
/// Carries the best available estimate and its error bound.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

}  // namespace kgc
