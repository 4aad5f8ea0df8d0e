#include "ineq/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ineq/errors.hpp"
#include "ineq/summation.hpp"

namespace ineq {
namespace {

void require_pairs(const Sample& s, const char* name) {
  if (s.size() < 2) {
    throw DomainError(std::string(name) + ": need at least 2 observations");
  }
}

double pair_denominator(std::size_t n, double mean) {
  const auto nd = static_cast<double>(n);
  return nd * (nd - 1.0) * mean;
}

}  // namespace

double i_hat_pairwise(const Sample& s, LambdaWeight lambda) {
  require_pairs(s, "i_hat");
  const double mean = s.mean();
  if (mean == 0.0) return 0.0;
  const double l = lambda.value();
  const auto x = s.values();
  const std::size_t n = x.size();
  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    const double centred = (1.0 - l) * (x[i] - mean);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      sum += std::abs(centred + l * (x[i] - x[j]));
    }
  }
  return sum.value() / (2.0 * pair_denominator(n, mean));
}

double i_hat(const Sample& s, LambdaWeight lambda) {
  require_pairs(s, "i_hat");
  if (lambda.value() == 0.0) return h_hat(s);
  if (lambda.value() == 1.0) return g_hat(s);
  return i_hat_pairwise(s, lambda);
}

double i_hat_fast(const Sample& s, LambdaWeight lambda) {
  require_pairs(s, "i_hat_fast");
  const double l = lambda.value();
  if (l == 0.0) return h_hat(s);
  if (l == 1.0) return g_hat_fast(s);
  const double mean = s.mean();
  if (mean == 0.0) return 0.0;

  std::vector<double> sorted(s.values().begin(), s.values().end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  std::vector<double> prefix(n + 1, 0.0);
  {
    CompensatedSum running;
    for (std::size_t k = 0; k < n; ++k) {
      running += sorted[k];
      prefix[k + 1] = running.value();
    }
  }

  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = sorted[i];
    const double a = xi - (1.0 - l) * mean;
    // Observations equal to the split point contribute |0| on either side.
    const auto below = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), a / l) - sorted.begin());
    const auto kb = static_cast<double>(below);
    const auto ka = static_cast<double>(n - below);
    const double left = kb * a - l * prefix[below];
    const double right = l * (prefix[n] - prefix[below]) - ka * a;
    sum += left;
    sum += right;
    sum += -(1.0 - l) * std::abs(xi - mean);
  }
  return std::max(0.0, sum.value()) / (2.0 * pair_denominator(n, mean));
}

double h_hat(const Sample& s) {
  if (s.empty()) throw DomainError("h_hat: empty sample");
  const double mean = s.mean();
  if (mean == 0.0) return 0.0;
  CompensatedSum sum;
  for (double v : s.values()) sum += std::abs(v - mean);
  return sum.value() / (2.0 * static_cast<double>(s.size()) * mean);
}

double g_hat(const Sample& s) {
  require_pairs(s, "g_hat");
  const double mean = s.mean();
  if (mean == 0.0) return 0.0;
  const auto x = s.values();
  CompensatedSum sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) sum += std::abs(x[i] - x[j]);
  }
  return sum.value() / pair_denominator(x.size(), mean);
}

double g_hat_fast(const Sample& s) {
  require_pairs(s, "g_hat_fast");
  const double mean = s.mean();
  if (mean == 0.0) return 0.0;
  std::vector<double> sorted(s.values().begin(), s.values().end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  CompensatedSum sum;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    sum += (2.0 * static_cast<double>(k) - n + 1.0) * sorted[k];
  }
  return sum.value() / pair_denominator(sorted.size(), mean);
}

double j_hat(const Sample& s, LambdaWeight lambda) {
  const double l = lambda.value();
  return (1.0 - l) * h_hat(s) + l * g_hat(s);
}

EstimateReport estimate_report(const Sample& s, LambdaWeight lambda) {
  const double h = h_hat(s);
  const double g = g_hat_fast(s);
  const double l = lambda.value();
  return {l, i_hat_fast(s, lambda), h, g, (1.0 - l) * h + l * g, s.size()};
}

McSummary summarize(std::span<const double> estimates, double truth) {
  if (estimates.empty()) throw DomainError("summarize: no estimates");
  const auto r = static_cast<double>(estimates.size());
  CompensatedSum total;
  for (double e : estimates) total += e;
  const double mean = total.value() / r;
  CompensatedSum squared_error;
  CompensatedSum squared_spread;
  for (double e : estimates) {
    squared_error += (e - truth) * (e - truth);
    squared_spread += (e - mean) * (e - mean);
  }
  const bool degenerate = estimates.size() == 1;
  return {mean, mean - truth, squared_error.value() / r,
          degenerate ? 0.0 : squared_spread.value() / (r - 1.0), degenerate};
}

}  // namespace ineq
