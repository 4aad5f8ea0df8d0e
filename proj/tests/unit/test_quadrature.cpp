#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ineq/errors.hpp"
#include "ineq/quadrature.hpp"
#include "ineq/specfun.hpp"

using namespace ineq::quad;

TEST_CASE("finite integrals with known values") {
  auto one = integrate_finite([](double) { return 1.0; }, 0.0, 1.0);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.evaluations >= 15);
  CHECK(one.abs_error_estimate >= 0.0);

  auto decay = integrate_finite([](double t) { return std::exp(-t); }, 0.0, 50.0);
  CHECK(std::abs(decay.value - (1.0 - std::exp(-50.0))) < 1e-13);

  // ∫_0^∞ Q(s, t) dt = s, truncated where the tail is below 1e-30.
  auto q2 = integrate_finite(
      [](double t) { return ineq::specfun::reg_gamma_q(2.0, t); }, 0.0, 200.0);
  CHECK(q2.value == doctest::Approx(2.0).epsilon(1e-11));

  auto empty = integrate_finite([](double) { return 1.0; }, 3.0, 3.0);
  CHECK(empty.value == 0.0);
}

TEST_CASE("semi-infinite integrals with known values") {
  auto e = integrate_semi_infinite([](double t) { return std::exp(-t); }, 0.0);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-11));

  auto sq = integrate_semi_infinite(
      [](double t) {
        const double q = ineq::specfun::reg_gamma_q(1.0, t);
        return q * q;
      },
      0.0);
  CHECK(sq.value == doctest::Approx(0.5).epsilon(1e-11));

  auto gauss = integrate_semi_infinite(
      [](double t) { return t * std::exp(-t * t); }, 0.0);
  CHECK(gauss.value == doctest::Approx(0.5).epsilon(1e-11));

  auto shifted = integrate_semi_infinite([](double t) { return std::exp(-t); }, 3.0);
  CHECK(shifted.value == doctest::Approx(std::exp(-3.0)).epsilon(1e-10));
}

TEST_CASE("breakpoints resolve kinks and jumps") {
  auto kink = [](double t) { return std::abs(t - 0.3); };
  const std::vector<double> cut{0.3};
  auto r = integrate_piecewise(kink, 0.0, 1.0, cut);
  CHECK(r.value == doctest::Approx(0.5 * 0.09 + 0.5 * 0.49).epsilon(1e-14));

  auto step = [](double t) { return t < 0.7 ? 1.0 : 3.0; };
  const std::vector<double> cuts{0.7, -5.0, 12.0};
  auto s = integrate_piecewise(step, 0.0, 1.0, cuts);
  CHECK(s.value == doctest::Approx(0.7 + 0.9).epsilon(1e-14));
}

TEST_CASE("splitting the domain is additive") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const double a = coef(gen);
    const double b = coef(gen);
    const double c = coef(gen);
    auto f = [=](double t) { return std::sin(a * t) + b * std::exp(-t * t) + c * t * t; };
    const double whole = integrate_finite(f, -1.0, 2.0).value;
    const double split = integrate_finite(f, -1.0, 0.4).value +
                         integrate_finite(f, 0.4, 2.0).value;
    CHECK(std::abs(whole - split) <= 2e-11 + 2e-9 * std::abs(whole));
  }
}

TEST_CASE("reported error bounds the true error") {
  struct Case {
    Integrand f;
    double lo;
    double hi;
    double exact;
  };
  const std::vector<Case> cases{
      {[](double t) { return std::cos(t); }, 0.0, std::numbers::pi / 2, 1.0},
      {[](double t) { return std::sqrt(t); }, 0.0, 1.0, 2.0 / 3.0},
      {[](double t) { return 1.0 / (1.0 + t * t); }, 0.0, 10.0, std::atan(10.0)},
      {[](double t) { return std::log(t); }, 0.0, 1.0, -1.0},
      {[](double t) { return std::exp(3.0 * t); }, 0.0, 2.0, (std::exp(6.0) - 1.0) / 3.0},
  };
  for (const auto& c : cases) {
    const QuadResult r = integrate_finite(c.f, c.lo, c.hi, {1e-12, 1e-12});
    CHECK(std::abs(r.value - c.exact) <= r.abs_error_estimate + 1e-15);
  }
}

TEST_CASE("non-convergence carries the best estimate") {
  auto spike = [](double t) { return 1.0 / t; };
  try {
    integrate_finite(spike, 0.0, 1.0, {1e-14, 1e-14});
    FAIL("expected QuadratureError");
  } catch (const ineq::QuadratureError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_bound() > 0.0);
  }
}

TEST_CASE("invalid input") {
  auto f = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate_finite(f, 1.0, 0.0), ineq::DomainError);
  CHECK_THROWS_AS(integrate_finite(f, 0.0, 1.0, {0.0, 1e-9}), ineq::DomainError);
  CHECK_THROWS_AS(integrate_finite([](double) { return NAN; }, 0.0, 1.0),
                  ineq::DomainError);
  CHECK_THROWS_AS(integrate_semi_infinite(f, INFINITY), ineq::DomainError);
}
