#include "ineq/sample.hpp"

#include <cmath>

#include "ineq/errors.hpp"
#include "ineq/summation.hpp"

namespace ineq {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("Sample: observations must be finite and >= 0");
    }
  }
}

double Sample::mean() const {
  if (values_.empty()) throw DomainError("Sample::mean: empty sample");
  CompensatedSum sum;
  for (double v : values_) sum += v;
  return sum.value() / static_cast<double>(values_.size());
}

Sample Sample::transformed(double scale, double shift) const {
  if (!std::isfinite(scale) || scale <= 0.0 || !std::isfinite(shift) ||
      shift < 0.0) {
    throw DomainError("Sample::transformed: need scale > 0 and shift >= 0");
  }
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out[i] = scale * values_[i] + shift;
  }
  return Sample(std::move(out));
}

}  // namespace ineq
