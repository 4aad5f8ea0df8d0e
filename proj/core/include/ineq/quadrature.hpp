#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace ineq::quad {

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct Tolerance {
  double abs = 1e-11;
  double rel = 1e-9;
};

/// Subinterval budget for one adaptive integration.
inline constexpr std::size_t kMaxSubintervals = 10000;

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss–Kronrod integration over [lo, hi].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate is below max(tol.abs, tol.rel * |value|). Throws QuadratureError
/// (carrying the best estimate) when the subinterval budget runs out, and
/// DomainError if lo > hi, tolerances are not positive, or the integrand
/// returns a non-finite value.
QuadResult integrate_finite(const Integrand& f, double lo, double hi,
                            Tolerance tol = {});

/// As integrate_finite, but the domain is first cut at `breakpoints`
/// (points outside (lo, hi) are ignored). Use this for integrands with
/// jumps or kinks at known locations: no rule ever straddles a breakpoint.
QuadResult integrate_piecewise(const Integrand& f, double lo, double hi,
                               std::span<const double> breakpoints,
                               Tolerance tol = {});

/// Integral over [lo, ∞) through t = lo + u / (1 - u), u in [0, 1).
/// Intended for integrands that decay at least exponentially.
QuadResult integrate_semi_infinite(const Integrand& f, double lo,
                                   Tolerance tol = {});

}  // namespace ineq::quad
