#include "ineq/distributions.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "ineq/errors.hpp"
#include "ineq/quadrature.hpp"
#include "ineq/specfun.hpp"
#include "ineq/summation.hpp"

namespace ineq {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void check_time(double t, const char* name) {
  if (std::isnan(t) || t < 0.0) {
    throw DomainError(std::string(name) + ": argument must be >= 0");
  }
}

struct RateOrdered {
  double shape_hi;  // component with the larger rate
  double rate_hi;
  double shape_lo;
  double rate_lo;
};

RateOrdered order_by_rate(const GHypoParams& g) {
  if (g.beta1 >= g.beta2) return {g.alpha1, g.beta1, g.alpha2, g.beta2};
  return {g.alpha2, g.beta2, g.alpha1, g.beta1};
}

// Rough count of mixture terms needed at y = rate_hi * t: the smaller of the
// negative-binomial extent and the extent of the Poisson-type kernel.
double mixture_terms_needed(const RateOrdered& r, double t) {
  const double p = r.rate_lo / r.rate_hi;
  if (p >= 1.0) return 0.0;
  const double nb_mean = r.shape_lo * (1.0 - p) / p;
  const double nb_sd = std::sqrt(r.shape_lo * (1.0 - p)) / p;
  const double y = r.rate_hi * t;
  const double nu = r.shape_hi + r.shape_lo;
  const double kernel_extent =
      (y > nu ? 25.0 * std::sqrt(y) : std::max(0.0, y - nu) + 10.0 * std::sqrt(nu)) + 60.0;
  return std::min(nb_mean + 40.0 * nb_sd + 50.0, kernel_extent);
}

}  // namespace

GammaParams::GammaParams(double shape, double rate) : alpha(shape), beta(rate) {
  if (!positive_finite(shape) || !positive_finite(rate)) {
    throw DomainError("GammaParams: shape and rate must be finite and > 0");
  }
}

double GammaParams::laplace(double z) const {
  if (std::isnan(z) || z <= -beta) {
    throw DomainError("GammaParams::laplace: need z > -beta");
  }
  return std::exp(alpha * (std::log(beta) - std::log(beta + z)));
}

GHypoParams::GHypoParams(double a1, double b1, double a2, double b2)
    : alpha1(a1), beta1(b1), alpha2(a2), beta2(b2) {
  if (!positive_finite(a1) || !positive_finite(b1) || !positive_finite(a2) ||
      !positive_finite(b2)) {
    throw DomainError("GHypoParams: all parameters must be finite and > 0");
  }
}

DiscreteDist::DiscreteDist(std::vector<Atom> atoms) {
  if (atoms.empty()) throw DomainError("DiscreteDist: no atoms");
  CompensatedSum total;
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.value) || a.value < 0.0) {
      throw DomainError("DiscreteDist: values must be finite and >= 0");
    }
    if (!(a.prob > 0.0) || a.prob > 1.0) {
      throw DomainError("DiscreteDist: probabilities must lie in (0, 1]");
    }
    total += a.prob;
  }
  if (std::abs(total.value() - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "DiscreteDist: probabilities sum to " << total.value();
    throw DomainError(os.str());
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  for (const Atom& a : atoms) {
    if (!atoms_.empty() && atoms_.back().value == a.value) {
      atoms_.back().prob += a.prob;
    } else {
      atoms_.push_back(a);
    }
  }
}

double DiscreteDist::mean() const {
  CompensatedSum sum;
  for (const Atom& a : atoms_) sum += a.value * a.prob;
  return sum.value();
}

double DiscreteDist::survival_left(double t) const {
  // Atoms are sorted; sum the mass at values >= t from the top so small tails
  // are not lost to cancellation.
  CompensatedSum sum;
  for (auto it = atoms_.rbegin(); it != atoms_.rend() && it->value >= t; ++it) {
    sum += it->prob;
  }
  return std::min(1.0, sum.value());
}

std::vector<double> DiscreteDist::support() const {
  std::vector<double> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back(a.value);
  return out;
}

double gamma_survival(const GammaParams& p, double x) {
  check_time(x, "gamma_survival");
  return specfun::reg_gamma_q(p.alpha, p.beta * x);
}

double gamma_cdf(const GammaParams& p, double x) {
  check_time(x, "gamma_cdf");
  return specfun::reg_gamma_p(p.alpha, p.beta * x);
}

double gamma_pdf(const GammaParams& p, double x) {
  check_time(x, "gamma_pdf");
  if (x == 0.0) {
    if (p.alpha < 1.0) return std::numeric_limits<double>::infinity();
    return p.alpha == 1.0 ? p.beta : 0.0;
  }
  // beta * y^{alpha-1} e^{-y} / Γ(alpha) with y = beta x.
  return p.beta * std::exp(specfun::log_gamma_kernel(p.alpha - 1.0, p.beta * x));
}

double gamma_variate(const GammaParams& p, Rng& rng) {
  if (p.alpha < 1.0) {
    const GammaParams boosted(p.alpha + 1.0, p.beta);
    const double u = rng.uniform();
    return gamma_variate(boosted, rng) * std::pow(u, 1.0 / p.alpha);
  }
  const double d = p.alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / p.beta;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v / p.beta;
    }
  }
}

Sample gamma_sample(const GammaParams& p, Rng& rng, std::size_t count) {
  if (count == 0) throw DomainError("gamma_sample: count must be >= 1");
  std::vector<double> values(count);
  for (double& v : values) v = gamma_variate(p, rng);
  return Sample(std::move(values));
}

double ghypo_pdf(const GHypoParams& g, double t) {
  check_time(t, "ghypo_pdf");
  const RateOrdered r = order_by_rate(g);
  const double nu = g.alpha1 + g.alpha2;
  if (t == 0.0) {
    if (nu < 1.0) return std::numeric_limits<double>::infinity();
    return nu == 1.0 ? std::pow(g.beta1, g.alpha1) * std::pow(g.beta2, g.alpha2)
                     : 0.0;
  }
  const double log_front = g.alpha1 * std::log(g.beta1) +
                           g.alpha2 * std::log(g.beta2) +
                           (nu - 1.0) * std::log(t) - r.rate_hi * t -
                           specfun::log_gamma(nu);
  const double log_series = specfun::log_kummer_1f1_positive(
      r.shape_lo, nu, (r.rate_hi - r.rate_lo) * t);
  return std::exp(log_front + log_series);
}

double ghypo_survival_mixture(const GHypoParams& g, double t) {
  check_time(t, "ghypo_survival");
  if (t == 0.0) return 1.0;
  const RateOrdered r = order_by_rate(g);
  const double nu = r.shape_hi + r.shape_lo;
  const double y = r.rate_hi * t;
  const double base = specfun::reg_gamma_q(nu, y);
  const double p = r.rate_lo / r.rate_hi;
  if (p >= 1.0) return base;

  // S = Q(nu, y) + Σ_j D_{nu+j} P(K > j), K ~ NegBin(shape_lo, p),
  // D_s = y^s e^{-y} / Γ(s + 1). D is negligible more than 12 standard
  // deviations below its peak at s ≈ y, so the sum starts there with the
  // negative-binomial tail taken from the incomplete beta function.
  const double skip = std::floor(y - nu - 12.0 * std::sqrt(y) - 5.0);
  const double first = std::max(0.0, skip);
  double tail = first == 0.0
                    ? 1.0
                    : boost::math::ibetac(r.shape_lo, first, p);  // P(K >= first)
  const double log_y = std::log(y);
  const double log_1mp = std::log1p(-p);
  double log_w = specfun::log_gamma(r.shape_lo + first) -
                 specfun::log_gamma(r.shape_lo) - std::lgamma(first + 1.0) +
                 r.shape_lo * std::log(p) + first * log_1mp;
  double log_d = specfun::log_gamma_kernel(nu + first, y);
  CompensatedSum sum(base);
  const auto cap = static_cast<double>(specfun::kMaxSeriesTerms);
  for (double j = first;; j += 1.0) {
    tail = std::max(0.0, tail - std::exp(log_w));
    const double d = std::exp(log_d);
    sum += d * tail;
    if (tail < 1e-17) break;
    const double next_s = nu + j + 1.0;
    if (next_s > y) {
      const double ratio = y / next_s;
      if (d * tail / (1.0 - ratio) < 1e-17) break;
    }
    if (j - first >= cap) {
      throw NumericError("ghypo_survival: mixture series cap reached");
    }
    log_w += std::log((r.shape_lo + j) / (j + 1.0)) + log_1mp;
    log_d += log_y - std::log(next_s);
  }
  return std::clamp(sum.value(), 0.0, 1.0);
}

double ghypo_survival_convolution(const GHypoParams& g, double t) {
  check_time(t, "ghypo_survival");
  if (t == 0.0) return 1.0;
  const RateOrdered r = order_by_rate(g);
  const GammaParams spread(r.shape_lo, r.rate_lo);
  const GammaParams narrow(r.shape_hi, r.rate_hi);

  // Q_hi(x) is negligible beyond `reach`, so only b in [t - reach, t] matters
  // in S(t) = Q_lo(t) + ∫_0^t f_lo(b) Q_hi(t - b) db.
  double reach = (narrow.alpha + 10.0 * std::sqrt(narrow.alpha) + 10.0) /
                 narrow.beta;
  while (gamma_survival(narrow, reach) > 1e-18) reach *= 2.0;

  const double lo = std::max(0.0, t - reach);
  const double centre = t - narrow.mean();
  const double spread_hi = std::sqrt(narrow.variance());
  std::array<double, 5> cuts{centre - 4.0 * spread_hi, centre - spread_hi,
                             centre, centre + spread_hi,
                             centre + 4.0 * spread_hi};
  auto integrand = [&](double b) {
    return gamma_pdf(spread, b) * gamma_survival(narrow, t - b);
  };
  const quad::QuadResult conv =
      quad::integrate_piecewise(integrand, lo, t, cuts, {1e-14, 1e-11});
  return std::clamp(gamma_survival(spread, t) + conv.value, 0.0, 1.0);
}

double ghypo_survival(const GHypoParams& g, double t) {
  check_time(t, "ghypo_survival");
  if (mixture_terms_needed(order_by_rate(g), t) > kGHypoMaxMixtureTerms) {
    return ghypo_survival_convolution(g, t);
  }
  return ghypo_survival_mixture(g, t);
}

double ghypo_cdf(const GHypoParams& g, double t) {
  check_time(t, "ghypo_cdf");
  if (t == 0.0) return 0.0;
  return std::clamp(1.0 - ghypo_survival(g, t), 0.0, 1.0);
}

DiscreteDist discrete_shift_scale(const DiscreteDist& d, double scale,
                                  double shift) {
  if (!positive_finite(scale)) {
    throw DomainError("discrete_shift_scale: scale must be finite and > 0");
  }
  if (!std::isfinite(shift) || shift < 0.0) {
    throw DomainError("discrete_shift_scale: shift must be finite and >= 0");
  }
  std::vector<Atom> atoms;
  atoms.reserve(d.atoms().size());
  for (const Atom& a : d.atoms()) {
    atoms.push_back({scale * a.value + shift, a.prob});
  }
  return DiscreteDist(std::move(atoms));
}

}  // namespace ineq
