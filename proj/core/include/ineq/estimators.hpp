#pragma once

#include <cstddef>
#include <span>

#include "ineq/index.hpp"
#include "ineq/sample.hpp"

namespace ineq {

/// Plug-in estimator of I_λ:
///   [2n(n-1) X̄]^{-1} Σ_{i≠j} |(1-λ)(X_i - X̄) + λ(X_i - X_j)|,
/// and 0 for an all-zero sample. Quadratic reference evaluation; at λ = 0
/// and λ = 1 it returns h_hat and g_hat. Throws DomainError if n < 2.
double i_hat(const Sample& s, LambdaWeight lambda);

/// The same pair sum as i_hat with no endpoint dispatch. Exposed for tests.
double i_hat_pairwise(const Sample& s, LambdaWeight lambda);

/// Sort-based O(n log n) evaluation of i_hat. For fixed i the inner sum
/// Σ_j |a_i - λ X_j| with a_i = X_i - (1-λ) X̄ is read off prefix sums of the
/// sorted sample at the split point a_i / λ. The endpoints use h_hat and
/// g_hat_fast.
double i_hat_fast(const Sample& s, LambdaWeight lambda);

/// Hoover estimator (2n X̄)^{-1} Σ |X_i - X̄|; 0 on an all-zero sample.
/// Throws DomainError on an empty sample.
double h_hat(const Sample& s);

/// Upward-adjusted Gini estimator [n(n-1) X̄]^{-1} Σ_{i<j} |X_i - X_j|.
double g_hat(const Sample& s);

/// Sort-based O(n log n) Gini estimator, equal to g_hat up to rounding.
double g_hat_fast(const Sample& s);

/// Ĵ_λ = (1-λ) Ĥ + λ Ĝ.
double j_hat(const Sample& s, LambdaWeight lambda);

struct EstimateReport {
  double lambda;
  double i_hat;
  double h_hat;
  double g_hat;
  double j_hat;
  std::size_t n;
};

EstimateReport estimate_report(const Sample& s, LambdaWeight lambda);

struct McSummary {
  double mean;
  double bias;
  double mse;
  double variance;
  /// True when only one estimate was given; variance is then reported as 0.
  bool degenerate;
};

/// Monte Carlo summaries of a list of estimates against a known truth:
/// mean, bias = mean - truth, mse = Σ(e - truth)² / R and
/// variance = Σ(e - mean)² / (R - 1). Throws DomainError on an empty list.
McSummary summarize(std::span<const double> estimates, double truth);

}  // namespace ineq
