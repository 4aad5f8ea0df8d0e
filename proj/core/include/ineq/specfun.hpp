#pragma once

// Scalar special functions behind every closed form in the library.
// All functions are pure and safe to call concurrently.

namespace ineq::specfun {

/// ln Γ(s) for s > 0. Throws DomainError for non-finite or non-positive s.
double log_gamma(double s);

/// Regularized upper incomplete gamma Q(s, x) = Γ(s, x) / Γ(s).
///
/// Series for x < s + 1, Lentz continued fraction otherwise. The common
/// factor x^s e^{-x} / Γ(s) is formed in log space through a Stirling
/// remainder so that s in the thousands neither overflows nor cancels.
double reg_gamma_q(double s, double x);

/// Regularized lower incomplete gamma P(s, x) = 1 - Q(s, x).
double reg_gamma_p(double s, double x);

/// ln(x^s e^{-x} / Γ(s + 1)), the log of the Poisson-type kernel shared by
/// the incomplete gamma recurrences. Requires s > -1, x > 0.
double log_gamma_kernel(double s, double x);

/// ln ₁F₁(a; b; x) for x >= 0, a >= 0, b > 0. All terms are positive, so
/// the only failure mode is the term cap.
double log_kummer_1f1_positive(double a, double b, double x);

/// Kummer's confluent hypergeometric function ₁F₁(a; b; x).
///
/// Negative arguments go through the Kummer transformation
/// ₁F₁(a; b; -x) = e^{-x} ₁F₁(b - a; b; x) whenever b >= a, so every summed
/// series has non-negative terms. Throws DomainError if b <= 0 and
/// NumericError naming (a, b, x) on overflow or when the series cap is hit.
double kummer_1f1(double a, double b, double x);

/// Hard cap on the number of series terms before a NumericError.
inline constexpr int kMaxSeriesTerms = 100000;

}  // namespace ineq::specfun
