#pragma once

#include <stdexcept>
#include <string>

namespace ineq {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numeric routine failed to produce a trustworthy value (series cap,
/// overflow, quadrature budget exhausted).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature ran out of subintervals before meeting tolerance.
/// Carries the best estimate reached so callers can decide what to do.
class QuadratureError : public NumericError {
 public:
  QuadratureError(const std::string& what, double best_estimate,
                  double error_bound)
      : NumericError(what),
        best_estimate_(best_estimate),
        error_bound_(error_bound) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

}  // namespace ineq
