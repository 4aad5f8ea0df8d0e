#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ineq {

/// Finite, non-negative observations. Estimators impose their own minimum
/// sizes; the type itself only rejects negative or non-finite values.
class Sample {
 public:
  Sample() = default;
  explicit Sample(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Arithmetic mean (compensated). Requires a non-empty sample.
  double mean() const;

  /// a * x + c applied to every observation; a > 0, c >= 0.
  Sample transformed(double scale, double shift) const;

 private:
  std::vector<double> values_;
};

}  // namespace ineq
