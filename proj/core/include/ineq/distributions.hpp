#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ineq/random.hpp"
#include "ineq/sample.hpp"

namespace ineq {

/// Gamma population with shape alpha and rate beta (mean alpha / beta).
/// Exponential tilting by z > 0 maps Gamma(alpha, beta) to
/// Gamma(alpha, beta + z); see tilted().
struct GammaParams {
  double alpha;
  double beta;

  GammaParams(double shape, double rate);

  double mean() const { return alpha / beta; }
  double variance() const { return alpha / (beta * beta); }
  /// E[e^{-zX}] = (beta / (beta + z))^alpha.
  double laplace(double z) const;
  GammaParams tilted(double z) const { return {alpha, beta + z}; }
};

/// Law of X1 + X2 for independent X_i ~ Gamma(alpha_i, beta_i).
struct GHypoParams {
  double alpha1;
  double beta1;
  double alpha2;
  double beta2;

  GHypoParams(double a1, double b1, double a2, double b2);

  double mean() const { return alpha1 / beta1 + alpha2 / beta2; }
};

struct Atom {
  double value;
  double prob;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finitely supported non-negative population. Atoms are kept sorted by
/// value with duplicates merged, so equal distributions compare equal.
class DiscreteDist {
 public:
  /// Throws DomainError on an empty list, negative or non-finite values,
  /// probabilities outside (0, 1], or a total mass off 1 by more than 1e-12.
  explicit DiscreteDist(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  double mean() const;
  /// P(X >= t), the left-continuous survival F̄(t⁻).
  double survival_left(double t) const;
  std::vector<double> support() const;

  friend bool operator==(const DiscreteDist&, const DiscreteDist&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// Gamma survival F̄(x) = Q(alpha, beta x). Throws DomainError for x < 0.
double gamma_survival(const GammaParams& p, double x);
double gamma_cdf(const GammaParams& p, double x);
double gamma_pdf(const GammaParams& p, double x);

/// One Gamma(alpha, beta) variate: Marsaglia–Tsang squeeze for alpha >= 1,
/// and for alpha < 1 a draw at alpha + 1 scaled by U^{1/alpha}.
double gamma_variate(const GammaParams& p, Rng& rng);

/// `count` independent draws; deterministic in the generator state.
Sample gamma_sample(const GammaParams& p, Rng& rng, std::size_t count);

/// GHypo density through the confluent hypergeometric form, with the
/// prefactor in log space and the ₁F₁ argument kept non-negative.
double ghypo_pdf(const GHypoParams& g, double t);

/// GHypo distribution function. See ghypo_survival.
double ghypo_cdf(const GHypoParams& g, double t);

/// P(X1 + X2 > t). Evaluated as a negative-binomial mixture of gamma
/// survivals at the larger rate (every term non-negative). When the rate
/// ratio is so extreme that the mixture needs more than
/// kGHypoMaxMixtureTerms terms, falls back to a convolution integral.
double ghypo_survival(const GHypoParams& g, double t);

/// The two evaluation routes behind ghypo_survival, exposed so they can be
/// checked against each other.
double ghypo_survival_mixture(const GHypoParams& g, double t);
double ghypo_survival_convolution(const GHypoParams& g, double t);

inline constexpr double kGHypoMaxMixtureTerms = 20000.0;

/// Atoms mapped v -> scale * v + shift; scale > 0, shift >= 0.
DiscreteDist discrete_shift_scale(const DiscreteDist& d, double scale,
                                  double shift);

}  // namespace ineq
