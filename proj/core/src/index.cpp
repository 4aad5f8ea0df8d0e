#include "ineq/index.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>

#include "ineq/errors.hpp"
#include "ineq/quadrature.hpp"
#include "ineq/specfun.hpp"
#include "ineq/summation.hpp"

namespace ineq {
namespace {

double checked_mean(const DiscreteDist& d) {
  const double mu = d.mean();
  if (!(mu > 0.0)) {
    throw DomainError("inequality index undefined: population mean is zero");
  }
  return mu;
}

void check_shape(double alpha, const char* name) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError(std::string(name) + ": shape must be finite and > 0");
  }
}

constexpr quad::Tolerance kIndexTolerance{1e-13, 1e-11};

}  // namespace

LambdaWeight::LambdaWeight(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    std::ostringstream os;
    os << "lambda must lie in [0, 1], got " << lambda;
    throw DomainError(os.str());
  }
}

double discrete_index(const DiscreteDist& d, LambdaWeight lambda) {
  const double mu = checked_mean(d);
  const double l = lambda.value();
  CompensatedSum sum;
  for (const Atom& x1 : d.atoms()) {
    for (const Atom& x2 : d.atoms()) {
      const double dev = (1.0 - l) * (x1.value - mu) + l * (x1.value - x2.value);
      sum += x1.prob * x2.prob * std::abs(dev);
    }
  }
  return sum.value() / (2.0 * mu);
}

double discrete_hoover(const DiscreteDist& d) {
  const double mu = checked_mean(d);
  CompensatedSum sum;
  for (const Atom& a : d.atoms()) sum += a.prob * std::abs(a.value - mu);
  return sum.value() / (2.0 * mu);
}

double discrete_gini(const DiscreteDist& d) {
  const double mu = checked_mean(d);
  CompensatedSum sum;
  for (const Atom& x1 : d.atoms()) {
    for (const Atom& x2 : d.atoms()) {
      sum += x1.prob * x2.prob * std::abs(x1.value - x2.value);
    }
  }
  return sum.value() / (2.0 * mu);
}

double integral_index(const SurvivalFn& survival, double mean,
                      LambdaWeight lambda, std::span<const double> support) {
  if (!std::isfinite(mean) || mean <= 0.0) {
    throw DomainError("integral_index: mean must be finite and > 0");
  }
  const double l = lambda.value();
  const double shift = (1.0 - l) * mean;
  auto cdf_left = [&](double t) { return 1.0 - survival(t); };

  if (l == 0.0) {
    std::vector<double> cuts(support.begin(), support.end());
    const double area =
        quad::integrate_piecewise(cdf_left, 0.0, mean, cuts, kIndexTolerance)
            .value;
    return area / mean;
  }

  auto mixed_survival = [&](double t) {
    return t <= shift ? 1.0 : survival((t - shift) / l);
  };
  auto integrand = [&](double t) { return cdf_left(t) * mixed_survival(t); };

  if (!support.empty()) {
    const double top = *std::max_element(support.begin(), support.end());
    std::vector<double> cuts{shift};
    for (double v : support) {
      cuts.push_back(v);
      cuts.push_back(shift + l * v);
    }
    const double upper = std::max(shift, shift + l * top);
    const double area =
        quad::integrate_piecewise(integrand, 0.0, upper, cuts, kIndexTolerance)
            .value;
    return area / mean;
  }

  const double head =
      quad::integrate_finite(cdf_left, 0.0, shift, kIndexTolerance).value;
  const double tail =
      quad::integrate_semi_infinite(integrand, shift, kIndexTolerance).value;
  return (head + tail) / mean;
}

double gamma_hoover(double alpha) {
  check_shape(alpha, "gamma_hoover");
  // α^{α-1} e^{-α} / Γ(α) = α^α e^{-α} / Γ(α + 1)
  return std::exp(specfun::log_gamma_kernel(alpha, alpha));
}

double gamma_gini(double alpha) {
  check_shape(alpha, "gamma_gini");
  return std::exp(specfun::log_gamma(alpha + 0.5) - specfun::log_gamma(alpha) -
                  0.5 * std::log(std::numbers::pi) - std::log(alpha));
}

double gamma_index(double alpha, LambdaWeight lambda) {
  check_shape(alpha, "gamma_index");
  const double l = lambda.value();
  if (l == 0.0) return gamma_hoover(alpha);

  const double shift = (1.0 - l) * alpha;
  const double front =
      l == 1.0 ? 0.0
               : std::exp(alpha * std::log1p(-l) +
                          (alpha - 1.0) * std::log(alpha) - shift -
                          specfun::log_gamma(alpha));
  const double upper_tail = l * specfun::reg_gamma_q(alpha, shift);

  double top = std::max(shift, alpha + 40.0 * std::sqrt(alpha) + 40.0 * l);
  // ∫_top^∞ Q(α,t) dt <= α Q(α+1, top)
  while (alpha * specfun::reg_gamma_q(alpha + 1.0, top) >= 1e-13) top *= 2.0;

  auto integrand = [&](double t) {
    return specfun::reg_gamma_q(alpha, t) *
           specfun::reg_gamma_q(alpha, std::max(0.0, (t - shift) / l));
  };
  const double sd = std::sqrt(alpha);
  const std::array<double, 6> cuts{shift + l * std::max(0.0, alpha - 3.0 * sd),
                                   shift + l * alpha,
                                   shift + l * (alpha + 3.0 * sd),
                                   alpha,
                                   alpha + 3.0 * sd,
                                   alpha + 10.0 * sd};
  const double area =
      quad::integrate_piecewise(integrand, shift, top, cuts, kIndexTolerance)
          .value;
  return front + upper_tail - area / alpha;
}

double j_index(double hoover, double gini, LambdaWeight lambda) {
  const double l = lambda.value();
  return (1.0 - l) * hoover + l * gini;
}

std::vector<PathPoint> lambda_path(const LambdaEvaluator& evaluator,
                                   std::size_t grid_size) {
  if (grid_size < 2) throw DomainError("lambda_path: grid_size must be >= 2");
  if (!evaluator.at) throw DomainError("lambda_path: evaluator has no body");
  std::vector<PathPoint> path;
  path.reserve(grid_size);
  const double last = static_cast<double>(grid_size - 1);
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double l = k + 1 == grid_size ? 1.0 : static_cast<double>(k) / last;
    try {
      double v = 0.0;
      if (k == 0 && evaluator.at_zero) {
        v = evaluator.at_zero();
      } else if (k + 1 == grid_size && evaluator.at_one) {
        v = evaluator.at_one();
      } else {
        v = evaluator.at(l);
      }
      path.push_back({l, v});
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "lambda_path: evaluation failed at lambda=" << l << ": "
         << e.what();
      throw NumericError(os.str());
    }
  }
  return path;
}

}  // namespace ineq
