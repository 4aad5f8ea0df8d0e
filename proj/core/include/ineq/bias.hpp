#pragma once

#include <cstddef>
#include <cstdint>

#include "ineq/distributions.hpp"
#include "ineq/index.hpp"

namespace ineq {

/// One (α, λ, n) cell of the analytic bias study. The rate never enters.
struct BiasQuery {
  double alpha;
  double lambda;
  int n;

  BiasQuery(double shape, double weight, int sample_size);
};

/// E[Î_λ] for a Gamma(α, ·) sample of size n:
///   (1/α) { (1 + (λ-1)/n) α - (1/n) ∫_0^∞ S(t) Q(α, t/(n-1+λ)) dt },
/// where S is the survival of GHypo((n-2)α, 1/(1-λ), α, 1/(1+(n-1)λ)).
/// n = 2 uses the Gamma(α, 1/(1+λ)) survival (the first component is a
/// point mass at zero) and λ = 1 returns the Gini coefficient exactly.
double expected_i_hat(const BiasQuery& q);

/// E[Î_λ] - I_λ. Zero exactly at λ = 1.
double bias(const BiasQuery& q);

/// E[Ĥ] = (1/α){(1 - 1/n) α - (1/n) ∫_0^∞ Q((n-1)α, t) Q(α, t/(n-1)) dt}.
double expected_h_hat(double alpha, int n);

struct TiltingCheck {
  double lhs_mc;        ///< MC mean of |aW + bY - cZ| e^{-z(W+Y+Z)}
  double lhs_se;
  double rhs_analytic;  ///< L_W L_Y L_Z (a E W_z + b E Y_z + c E Z_z) G(...)
  double rhs_se;        ///< from the MC estimate of the G factor
  double combined_se() const;
};

/// Monte Carlo check of the exponential-tilting identity for independent
/// gammas W, Y, Z. The left side is sampled from the original laws; the
/// normalized mean absolute difference on the right is sampled from the
/// tilted laws Gamma(α, β + z) with independent generator streams.
TiltingCheck tilting_lemma_check(double a, double b, double c, double z,
                                 const GammaParams& w, const GammaParams& y,
                                 const GammaParams& zv, std::size_t draws,
                                 std::uint64_t seed);

}  // namespace ineq
