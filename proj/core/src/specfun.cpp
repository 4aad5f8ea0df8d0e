#include "ineq/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "ineq/errors.hpp"
#include "ineq/summation.hpp"

namespace ineq::specfun {
namespace {

constexpr double kTermTolerance = 1e-16;
constexpr int kQuietTermsToStop = 3;
constexpr double kLogMaxDouble = 709.782712893384;

std::string triple(double a, double b, double x) {
  std::ostringstream os;
  os.precision(17);
  os << "(a=" << a << ", b=" << b << ", x=" << x << ")";
  return os.str();
}

// ln Γ(s+1) - (s + 1/2) ln s + s - ln √(2π), via its asymptotic series.
// Only called for s >= 10 where five terms reach double precision.
double stirling_remainder(double s) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  const double inv2 = 1.0 / (s * s);
  return (s0 - (s1 - (s2 - (s3 - s4 * inv2) * inv2) * inv2) * inv2) / s;
}

// s ln(s/x) + x - s without cancellation when s and x are close.
double deviance_term(double s, double x) {
  if (std::abs(s - x) < 0.1 * (s + x)) {
    const double v = (s - x) / (s + x);
    double result = (s - x) * v;
    double ej = 2.0 * s * v;
    const double v2 = v * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v2;
      const double next = result + ej / (2 * j + 1);
      if (next == result) return result;
      result = next;
    }
    return result;
  }
  return s * std::log(s / x) + x - s;
}

void check_gamma_args(double s, double x, const char* name) {
  if (!std::isfinite(s) || s <= 0.0) {
    throw DomainError(std::string(name) + ": shape must be finite and > 0");
  }
  if (std::isnan(x) || x < 0.0) {
    throw DomainError(std::string(name) + ": argument must be >= 0");
  }
}

// Σ_{k>=0} x^k / ((s+1)...(s+k)); P(s,x) = kernel(s,x) * this.
double lower_series(double s, double x) {
  CompensatedSum sum(1.0);
  double term = 1.0;
  int quiet = 0;
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    term *= x / (s + k);
    sum += term;
    if (term < kTermTolerance * sum.value()) {
      if (++quiet >= kQuietTermsToStop) return sum.value();
    } else {
      quiet = 0;
    }
  }
  std::ostringstream os;
  os << "reg_gamma: series did not converge for s=" << s << ", x=" << x;
  throw NumericError(os.str());
}

// Modified Lentz evaluation of the continued fraction for Γ(s,x) e^x x^{-s}.
double upper_fraction(double s, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  int quiet = 0;
  for (int i = 1; i <= kMaxSeriesTerms; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kTermTolerance) {
      if (++quiet >= kQuietTermsToStop) return h;
    } else {
      quiet = 0;
    }
  }
  std::ostringstream os;
  os << "reg_gamma: continued fraction did not converge for s=" << s
     << ", x=" << x;
  throw NumericError(os.str());
}

// Large-x expansion of ln ₁F₁(a;b;x). Returns NaN when the expansion is not
// trustworthy for these arguments so the caller can fall back to the series.
double log_kummer_asymptotic(double a, double b, double x) {
  if (a <= 0.0 || x < 45.0) return std::numeric_limits<double>::quiet_NaN();
  // The recessive solution Γ(b)/Γ(b-a) (-x)^{-a} must be negligible
  // relative to the dominant e^x x^{a-b} branch.
  if (b - a > 0.0) {
    const double recessive = (b - 2.0 * a) * std::log(x) - x +
                             log_gamma(a) - log_gamma(b - a);
    if (recessive > -40.0) return std::numeric_limits<double>::quiet_NaN();
  }
  CompensatedSum sum(1.0);
  double term = 1.0;
  double previous = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double factor = (b - a + k) * (1.0 - a + k) / ((k + 1) * x);
    term *= factor;
    if (term == 0.0) break;
    if (std::abs(term) > std::abs(previous)) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    sum += term;
    if (std::abs(term) < kTermTolerance * std::abs(sum.value())) break;
    previous = term;
    if (k == 199) return std::numeric_limits<double>::quiet_NaN();
  }
  if (!(sum.value() > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return log_gamma(b) - log_gamma(a) + x + (a - b) * std::log(x) +
         std::log(sum.value());
}

// Direct Taylor sum with signed terms, used only outside the positive-term
// regime (a < 0, or x < 0 with b < a).
double kummer_signed_series(double a, double b, double x) {
  CompensatedSum sum(1.0);
  double term = 1.0;
  int quiet = 0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (a + k) / (b + k) * x / (k + 1);
    if (!std::isfinite(term)) {
      throw NumericError("kummer_1f1: overflow at " + triple(a, b, x));
    }
    sum += term;
    if (term == 0.0 ||
        std::abs(term) < kTermTolerance * std::abs(sum.value())) {
      if (term == 0.0 || ++quiet >= kQuietTermsToStop) return sum.value();
    } else {
      quiet = 0;
    }
  }
  throw NumericError("kummer_1f1: series cap reached at " + triple(a, b, x));
}

}  // namespace

double log_gamma(double s) {
  if (!std::isfinite(s) || s <= 0.0) {
    throw DomainError("log_gamma: argument must be finite and > 0");
  }
  return boost::math::lgamma(s);
}

double log_gamma_kernel(double s, double x) {
  if (s < 10.0) {
    return s * std::log(x) - x - log_gamma(s + 1.0);
  }
  return -stirling_remainder(s) - deviance_term(s, x) -
         0.5 * std::log(2.0 * std::numbers::pi * s);
}

double reg_gamma_q(double s, double x) {
  check_gamma_args(s, x, "reg_gamma_q");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < s + 1.0) {
    const double p = std::exp(log_gamma_kernel(s, x)) * lower_series(s, x);
    return p >= 1.0 ? 0.0 : 1.0 - p;
  }
  const double log_front = log_gamma_kernel(s, x) + std::log(s);
  if (log_front < -745.0) return 0.0;
  const double q = std::exp(log_front) * upper_fraction(s, x);
  return q > 1.0 ? 1.0 : q;
}

double reg_gamma_p(double s, double x) {
  check_gamma_args(s, x, "reg_gamma_p");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < s + 1.0) {
    const double p = std::exp(log_gamma_kernel(s, x)) * lower_series(s, x);
    return p > 1.0 ? 1.0 : p;
  }
  return 1.0 - reg_gamma_q(s, x);
}

double log_kummer_1f1_positive(double a, double b, double x) {
  if (!std::isfinite(b) || b <= 0.0) {
    throw DomainError("kummer_1f1: b must be finite and > 0, got " +
                      triple(a, b, x));
  }
  if (!std::isfinite(a) || a < 0.0 || !std::isfinite(x) || x < 0.0) {
    throw DomainError("log_kummer_1f1_positive: need a >= 0, x >= 0, got " +
                      triple(a, b, x));
  }
  if (a == 0.0 || x == 0.0) return 0.0;

  const double asymptotic = log_kummer_asymptotic(a, b, x);
  if (!std::isnan(asymptotic)) return asymptotic;

  // Positive series with periodic rescaling; the running sum is
  // exp(log_scale) * sum.
  constexpr double kRescaleAt = 1e250;
  const double log_rescale = std::log(kRescaleAt);
  CompensatedSum sum(1.0);
  double term = 1.0;
  double log_scale = 0.0;
  int quiet = 0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (a + k) / (b + k) * (x / (k + 1));
    sum += term;
    const double total = sum.value();
    if (total > kRescaleAt) {
      sum = CompensatedSum(total / kRescaleAt);
      term /= kRescaleAt;
      log_scale += log_rescale;
    }
    if (term < kTermTolerance * sum.value()) {
      if (++quiet >= kQuietTermsToStop) {
        return log_scale + std::log(sum.value());
      }
    } else {
      quiet = 0;
    }
  }
  throw NumericError("kummer_1f1: series cap reached at " + triple(a, b, x));
}

double kummer_1f1(double a, double b, double x) {
  if (!std::isfinite(b) || b <= 0.0) {
    throw DomainError("kummer_1f1: b must be finite and > 0, got " +
                      triple(a, b, x));
  }
  if (!std::isfinite(a) || !std::isfinite(x)) {
    throw DomainError("kummer_1f1: non-finite argument " + triple(a, b, x));
  }
  if (x == 0.0 || a == 0.0) return 1.0;

  double log_value = 0.0;
  if (x > 0.0 && a >= 0.0) {
    log_value = log_kummer_1f1_positive(a, b, x);
  } else if (x < 0.0 && b - a >= 0.0) {
    log_value = x + log_kummer_1f1_positive(b - a, b, -x);
  } else {
    return kummer_signed_series(a, b, x);
  }
  if (log_value > kLogMaxDouble) {
    throw NumericError("kummer_1f1: overflow at " + triple(a, b, x));
  }
  return std::exp(log_value);
}

}  // namespace ineq::specfun
