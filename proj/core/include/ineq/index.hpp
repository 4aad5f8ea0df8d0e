#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ineq/distributions.hpp"

namespace ineq {

/// Interpolation weight λ in [0, 1]: 0 is the Hoover index, 1 the Gini
/// coefficient.
class LambdaWeight {
 public:
  explicit LambdaWeight(double lambda);
  double value() const { return lambda_; }
  operator double() const { return lambda_; }

 private:
  double lambda_;
};

/// I_λ of a finite population by the defining double sum
/// (1/2μ) Σ_i Σ_j p_i p_j |(1-λ)(v_i - μ) + λ(v_i - v_j)|.
/// Throws DomainError when the mean is zero.
double discrete_index(const DiscreteDist& d, LambdaWeight lambda);

/// Hoover index and Gini coefficient of a finite population.
double discrete_hoover(const DiscreteDist& d);
double discrete_gini(const DiscreteDist& d);

/// Survival function t -> P(X >= t) of a non-negative variable.
using SurvivalFn = std::function<double(double)>;

/// I_λ = (1/μ) ∫_0^∞ F(t⁻) F̄_{λX₂+(1-λ)μ}(t⁻) dt.
///
/// `survival` must return P(X >= t). When `support` is non-empty the
/// variable is taken to be supported on those points: the integral is then
/// finite and split at every atom (and its image under v -> (1-λ)μ + λv) so
/// that no rule straddles a jump. λ = 0 reduces to (1/μ) ∫_0^μ F(t) dt.
double integral_index(const SurvivalFn& survival, double mean,
                      LambdaWeight lambda,
                      std::span<const double> support = {});

/// I_λ of Gamma(α, ·) (rate-free). Closed form in regularized incomplete
/// gamma functions plus one integral over [(1-λ)α, ∞); λ = 0 is the
/// Hoover closed form.
double gamma_index(double alpha, LambdaWeight lambda);

/// α^{α-1} e^{-α} / Γ(α).
double gamma_hoover(double alpha);

/// Γ(α + 1/2) / (√π α Γ(α)).
double gamma_gini(double alpha);

/// J_λ = (1-λ) H + λ G, the triangle-inequality upper bound on I_λ.
double j_index(double hoover, double gini, LambdaWeight lambda);

struct PathPoint {
  double lambda;
  double value;
};

/// Something that can be evaluated along λ. The optional endpoint callbacks
/// are used at λ = 0 and λ = 1 instead of `at`.
struct LambdaEvaluator {
  std::function<double(double)> at;
  std::function<double()> at_zero;
  std::function<double()> at_one;
};

/// Uniform grid λ_k = k / (grid_size - 1), k = 0..grid_size-1 (first point
/// exactly 0, last exactly 1). Evaluator failures are rethrown as
/// NumericError naming the offending λ.
std::vector<PathPoint> lambda_path(const LambdaEvaluator& evaluator,
                                   std::size_t grid_size);

}  // namespace ineq
