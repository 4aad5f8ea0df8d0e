#include "ineq/bias.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "ineq/errors.hpp"
#include "ineq/quadrature.hpp"
#include "ineq/random.hpp"
#include "ineq/specfun.hpp"
#include "ineq/summation.hpp"

namespace ineq {
namespace {

constexpr quad::Tolerance kBiasTolerance{1e-9, 1e-11};

// ∫_0^∞ survival(t) Q(α, t/scale) dt for a survival whose bulk sits near
// scale·α. The integrand is bounded by Q(α, t/scale), which sets the cutoff.
double scaled_overlap(const std::function<double(double)>& survival,
                      double alpha, double scale) {
  double top = scale * (alpha + 10.0 * std::sqrt(alpha) + 10.0);
  while (specfun::reg_gamma_q(alpha, top / scale) >= 1e-14) top *= 2.0;
  const double sd = std::sqrt(alpha);
  std::vector<double> cuts;
  for (double k : {-2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0}) {
    const double c = scale * (alpha + k * sd);
    if (c > 0.0) cuts.push_back(c);
  }
  auto integrand = [&](double t) {
    return survival(t) * specfun::reg_gamma_q(alpha, t / scale);
  };
  return quad::integrate_piecewise(integrand, 0.0, top, cuts, kBiasTolerance)
      .value;
}

struct Moments {
  double mean;
  double se;
};

Moments mean_and_se(const CompensatedSum& sum, const CompensatedSum& squares,
                    std::size_t draws) {
  const auto r = static_cast<double>(draws);
  const double mean = sum.value() / r;
  const double var = std::max(0.0, (squares.value() / r - mean * mean)) *
                     r / (r - 1.0);
  return {mean, std::sqrt(var / r)};
}

}  // namespace

BiasQuery::BiasQuery(double shape, double weight, int sample_size)
    : alpha(shape), lambda(weight), n(sample_size) {
  if (!std::isfinite(shape) || shape <= 0.0) {
    throw DomainError("BiasQuery: alpha must be finite and > 0");
  }
  static_cast<void>(LambdaWeight{weight});
  if (sample_size < 2) throw DomainError("BiasQuery: n must be >= 2");
}

double expected_i_hat(const BiasQuery& q) {
  if (q.lambda == 1.0) return gamma_gini(q.alpha);
  const double a = q.alpha;
  const double l = q.lambda;
  const auto n = static_cast<double>(q.n);
  const double scale = n - 1.0 + l;

  std::function<double(double)> survival;
  if (q.n == 2) {
    survival = [a, l](double t) {
      return specfun::reg_gamma_q(a, t / (1.0 + l));
    };
  } else {
    const GHypoParams g((n - 2.0) * a, 1.0 / (1.0 - l), a,
                        1.0 / (1.0 + (n - 1.0) * l));
    survival = [g](double t) { return ghypo_survival(g, t); };
  }
  const double overlap = scaled_overlap(survival, a, scale);
  return ((1.0 + (l - 1.0) / n) * a - overlap / n) / a;
}

double bias(const BiasQuery& q) {
  if (q.lambda == 1.0) return 0.0;
  return expected_i_hat(q) - gamma_index(q.alpha, LambdaWeight(q.lambda));
}

double expected_h_hat(double alpha, int n) {
  static_cast<void>(BiasQuery(alpha, 0.0, n));
  const double nd = static_cast<double>(n);
  const double shape = (nd - 1.0) * alpha;
  auto survival = [shape](double t) { return specfun::reg_gamma_q(shape, t); };
  const double overlap = scaled_overlap(survival, alpha, nd - 1.0);
  return ((1.0 - 1.0 / nd) * alpha - overlap / nd) / alpha;
}

double TiltingCheck::combined_se() const {
  return std::sqrt(lhs_se * lhs_se + rhs_se * rhs_se);
}

TiltingCheck tilting_lemma_check(double a, double b, double c, double z,
                                 const GammaParams& w, const GammaParams& y,
                                 const GammaParams& zv, std::size_t draws,
                                 std::uint64_t seed) {
  for (double coef : {a, b, c}) {
    if (!std::isfinite(coef) || coef < 0.0) {
      throw DomainError("tilting_lemma_check: a, b, c must be finite and >= 0");
    }
  }
  if (!std::isfinite(z) || z <= 0.0) {
    throw DomainError("tilting_lemma_check: z must be finite and > 0");
  }
  if (draws < 2) throw DomainError("tilting_lemma_check: need draws >= 2");

  Rng original(derive_seed(seed, 0));
  CompensatedSum lhs;
  CompensatedSum lhs_sq;
  for (std::size_t i = 0; i < draws; ++i) {
    const double wv = gamma_variate(w, original);
    const double yv = gamma_variate(y, original);
    const double zz = gamma_variate(zv, original);
    const double v = std::abs(a * wv + b * yv - c * zz) *
                     std::exp(-z * (wv + yv + zz));
    lhs += v;
    lhs_sq += v * v;
  }
  const Moments left = mean_and_se(lhs, lhs_sq, draws);

  const GammaParams wt = w.tilted(z);
  const GammaParams yt = y.tilted(z);
  const GammaParams zt = zv.tilted(z);
  const double transforms = w.laplace(z) * y.laplace(z) * zv.laplace(z);
  const double level = a * wt.mean() + b * yt.mean() + c * zt.mean();

  Rng tilted(derive_seed(seed, 1));
  CompensatedSum diff;
  CompensatedSum diff_sq;
  for (std::size_t i = 0; i < draws; ++i) {
    const double first = a * gamma_variate(wt, tilted) + b * gamma_variate(yt, tilted);
    const double second = c * gamma_variate(zt, tilted);
    const double v = std::abs(first - second);
    diff += v;
    diff_sq += v * v;
  }
  const Moments spread = mean_and_se(diff, diff_sq, draws);
  // Normalized mean absolute difference of the tilted pair; `level` is its
  // denominator E[A] + E[B].
  const double nmad = level > 0.0 ? spread.mean / level : 0.0;
  const double nmad_se = level > 0.0 ? spread.se / level : 0.0;
  return {left.mean, left.se, transforms * level * nmad,
          transforms * level * nmad_se};
}

}  // namespace ineq
