#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "ineq/distributions.hpp"
#include "ineq/errors.hpp"
#include "ineq/quadrature.hpp"
#include "ineq/random.hpp"
#include "ineq/specfun.hpp"

using namespace ineq;

namespace {

// P(E1 + E2 <= t) for independent exponentials with rates b1 != b2.
double two_exponential_cdf(double b1, double b2, double t) {
  return 1.0 - (b2 * std::exp(-b1 * t) - b1 * std::exp(-b2 * t)) / (b2 - b1);
}

}  // namespace

TEST_CASE("gamma survival and distribution function") {
  CHECK(gamma_survival({1.0, 1.0}, 0.6931471805599453) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gamma_survival({2.0, 1.0}, 0.0) == 1.0);
  CHECK(gamma_survival({0.5, 2.0}, 0.5) == doctest::Approx(0.1572992071).epsilon(1e-9));
  CHECK_THROWS_AS(gamma_survival({1.0, 1.0}, -0.1), DomainError);
  CHECK_THROWS_AS(GammaParams(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(GammaParams(1.0, -1.0), DomainError);

  for (double a : {0.5, 2.0, 10.0}) {
    for (double b : {0.3, 1.0, 4.0}) {
      for (double x : {0.01, 0.5, 3.0, 20.0}) {
        CHECK(gamma_cdf({a, b}, x) ==
              doctest::Approx(boost::math::gamma_p(a, b * x)).epsilon(1e-12).scale(1e-3));
        CHECK(gamma_pdf({a, b}, x) ==
              doctest::Approx(b * boost::math::gamma_p_derivative(a, b * x))
                  .epsilon(1e-12)
                  .scale(1e-12));
      }
    }
  }
}

TEST_CASE("gamma parameters: moments and tilting") {
  const GammaParams g(3.0, 2.0);
  CHECK(g.mean() == 1.5);
  CHECK(g.variance() == 0.75);
  CHECK(g.laplace(1.0) == doctest::Approx(std::pow(2.0 / 3.0, 3.0)));
  CHECK(g.tilted(0.5).beta == 2.5);
  CHECK(g.tilted(0.5).alpha == 3.0);
  CHECK_THROWS_AS(g.laplace(-2.0), DomainError);
}

TEST_CASE("gamma sampler is deterministic and has the right moments") {
  Rng a(123);
  Rng b(123);
  const Sample sa = gamma_sample({2.5, 1.0}, a, 100);
  const Sample sb = gamma_sample({2.5, 1.0}, b, 100);
  CHECK(std::equal(sa.values().begin(), sa.values().end(), sb.values().begin()));

  const std::size_t count = 1000000;
  {
    Rng rng(derive_seed(9, 0));
    const Sample s = gamma_sample({5.0, 1.0}, rng, count);
    CHECK(std::abs(s.mean() - 5.0) <= 5.0 * std::sqrt(5.0 / count));
  }
  {
    Rng rng(derive_seed(9, 1));
    const Sample s = gamma_sample({0.5, 1.0}, rng, count);
    const double m = s.mean();
    double ss = 0.0;
    for (double v : s.values()) ss += (v - m) * (v - m);
    const double var = ss / (count - 1.0);
    CHECK(std::abs(var - 0.5) <= 0.005);
  }
  Rng rng(1);
  CHECK_THROWS_AS(gamma_sample({1.0, 1.0}, rng, 0), DomainError);
}

TEST_CASE("ghypo distribution function at reference points") {
  CHECK(ghypo_cdf({1, 1, 1, 1}, 2.0) ==
        doctest::Approx(1.0 - 3.0 * std::exp(-2.0)).epsilon(1e-13));
  CHECK(ghypo_cdf({1, 1, 1, 2}, 1.0) ==
        doctest::Approx(1.0 - 2.0 * std::exp(-1.0) + std::exp(-2.0)).epsilon(1e-12));
  CHECK(ghypo_cdf({2.0, 0.8, 1.0, 1.5}, 0.0) == 0.0);
  CHECK_THROWS_AS(ghypo_cdf({1, 1, 1, 1}, -1.0), DomainError);
  CHECK_THROWS_AS(GHypoParams(1, 1, 0, 1), DomainError);
}

TEST_CASE("ghypo matches the two-exponential closed form") {
  for (auto [b1, b2] : {std::pair{1.0, 2.0}, std::pair{3.0, 0.5}, std::pair{0.2, 0.21}}) {
    const GHypoParams g(1.0, b1, 1.0, b2);
    for (double t = 0.05; t < 40.0; t *= 1.3) {
      CHECK(std::abs(ghypo_cdf(g, t) - two_exponential_cdf(b1, b2, t)) <= 1e-10);
    }
  }
}

TEST_CASE("ghypo with equal rates reduces to a gamma") {
  for (auto [a1, a2, b] : {std::tuple{1.0, 1.0, 1.0}, std::tuple{0.5, 2.5, 3.0},
                           std::tuple{18.0, 2.0, 0.25}}) {
    const GHypoParams g(a1, b, a2, b);
    for (double t = 0.01; t < 400.0; t *= 1.4) {
      CHECK(std::abs(ghypo_cdf(g, t) - (1.0 - specfun::reg_gamma_q(a1 + a2, b * t))) <=
            1e-10);
    }
  }
}

TEST_CASE("ghypo distribution function is monotone and reaches 1") {
  for (const GHypoParams g : {GHypoParams(2.0, 0.8, 1.0, 1.5),
                              GHypoParams(38.0, 4.0, 1.0, 1.0 / 31.0),
                              GHypoParams(0.5, 10.0, 0.5, 0.1)}) {
    double prev = 0.0;
    const double sd = std::sqrt(g.alpha1 / (g.beta1 * g.beta1) + g.alpha2 / (g.beta2 * g.beta2));
    const double top = g.mean() + 40.0 * sd;
    for (double t = 0.0; t <= top; t += top / 400.0) {
      const double c = ghypo_cdf(g, t);
      CHECK(c >= prev - 1e-14);
      CHECK(c <= 1.0);
      prev = c;
    }
    CHECK(ghypo_cdf(g, top) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("ghypo density") {
  CHECK(ghypo_pdf({1, 1, 1, 1}, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));

  const GHypoParams g(2.0, 0.8, 1.0, 1.5);
  const double h = 1e-5;
  const double fd = (ghypo_cdf(g, 1.3 + h) - ghypo_cdf(g, 1.3 - h)) / (2.0 * h);
  CHECK(std::abs(fd - ghypo_pdf(g, 1.3)) <= 1e-6);

  const double mass =
      quad::integrate_semi_infinite([&](double t) { return ghypo_pdf(g, t); }, 0.0,
                                    {1e-12, 1e-12})
          .value;
  CHECK(std::abs(mass - 1.0) <= 1e-9);

  // Large shapes: the density must still integrate to one.
  const GHypoParams wide(38.0, 4.0, 2.0, 1.0 / 21.0);
  const double wide_mass =
      quad::integrate_semi_infinite([&](double t) { return ghypo_pdf(wide, t); }, 0.0,
                                    {1e-12, 1e-12})
          .value;
  CHECK(std::abs(wide_mass - 1.0) <= 1e-9);
}

TEST_CASE("mixture and convolution routes agree") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> shape(0.3, 60.0);
  std::uniform_real_distribution<double> log_rate(-4.0, 2.0);
  for (int i = 0; i < 60; ++i) {
    const GHypoParams g(shape(gen), std::exp(log_rate(gen)), shape(gen),
                        std::exp(log_rate(gen)));
    for (double q : {0.2, 0.7, 1.0, 1.6, 3.0}) {
      const double t = q * g.mean();
      CHECK(std::abs(ghypo_survival_mixture(g, t) - ghypo_survival_convolution(g, t)) <=
            1e-10);
    }
  }
}

TEST_CASE("ghypo matches its empirical distribution (DKW)") {
  const GHypoParams g(2.0, 0.8, 1.0, 1.5);
  const std::size_t draws = 100000;
  Rng rng(derive_seed(77, 0));
  std::vector<double> x(draws);
  for (double& v : x) {
    v = gamma_variate({g.alpha1, g.beta1}, rng) + gamma_variate({g.alpha2, g.beta2}, rng);
  }
  std::sort(x.begin(), x.end());
  double sup = 0.0;
  for (std::size_t i = 0; i < draws; i += 7) {
    const double f = ghypo_cdf(g, x[i]);
    sup = std::max({sup, std::abs(f - static_cast<double>(i + 1) / draws),
                    std::abs(f - static_cast<double>(i) / draws)});
  }
  // P(sup > eps) <= 2 exp(-2 n eps²) = 1e-6
  const double eps = std::sqrt(std::log(2.0 / 1e-6) / (2.0 * draws));
  CHECK(sup <= eps);
}

TEST_CASE("tilted gamma realises the exponentially reweighted law") {
  const GammaParams x(2.5, 1.3);
  const double z = 0.7;
  const std::size_t draws = 200000;
  Rng rng(derive_seed(31, 0));
  std::vector<double> v(draws);
  for (double& d : v) d = gamma_variate(x, rng);
  for (double t : {0.5, 1.5, 3.0}) {
    double sum = 0.0;
    double sq = 0.0;
    for (double d : v) {
      const double w = d <= t ? std::exp(-z * d) : 0.0;
      sum += w;
      sq += w * w;
    }
    const double mean = sum / draws;
    const double se = std::sqrt((sq / draws - mean * mean) / draws);
    const double lhs = mean / x.laplace(z);
    const double rhs = 1.0 - gamma_survival(x.tilted(z), t);
    CHECK(std::abs(lhs - rhs) <= 4.0 * se / x.laplace(z));
  }
}

TEST_CASE("discrete distributions") {
  const DiscreteDist d({{3.0, 0.25}, {1.0, 0.5}, {3.0, 0.25}});
  REQUIRE(d.atoms().size() == 2);
  CHECK(d.atoms()[0] == Atom{1.0, 0.5});
  CHECK(d.atoms()[1] == Atom{3.0, 0.5});
  CHECK(d.mean() == 2.0);
  CHECK(d.survival_left(3.0) == 0.5);
  CHECK(d.survival_left(3.0001) == 0.0);
  CHECK(d.survival_left(0.0) == 1.0);

  CHECK_THROWS_AS(DiscreteDist({}), DomainError);
  CHECK_THROWS_AS(DiscreteDist({{1.0, 0.5}}), DomainError);
  CHECK_THROWS_AS(DiscreteDist({{-1.0, 1.0}}), DomainError);
  CHECK_THROWS_AS(DiscreteDist({{1.0, 0.0}, {2.0, 1.0}}), DomainError);

  const DiscreteDist base({{1.0, 0.5}, {3.0, 0.5}});
  CHECK(discrete_shift_scale(base, 1.0, 0.0) == base);
  CHECK(discrete_shift_scale(base, 2.0, 0.0) == DiscreteDist({{2.0, 0.5}, {6.0, 0.5}}));
  CHECK(discrete_shift_scale(base, 1.0, 1.0) == DiscreteDist({{2.0, 0.5}, {4.0, 0.5}}));
  CHECK_THROWS_AS(discrete_shift_scale(base, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(discrete_shift_scale(base, 1.0, -1.0), DomainError);
}
