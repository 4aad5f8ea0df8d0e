#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "ineq/errors.hpp"
#include "ineq/estimators.hpp"
#include "ineq/index.hpp"
#include "ineq/mc_harness.hpp"

using namespace ineq;

namespace {

bool same(const SimSummary& a, const SimSummary& b) {
  return a.truth == b.truth && a.mean == b.mean && a.bias == b.bias &&
         a.mse == b.mse && a.variance == b.variance && a.degenerate == b.degenerate;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(run_scenario({0.0, 0.5, 10, 10, 1}), DomainError);
  CHECK_THROWS_AS(run_scenario({1.0, 2.0, 10, 10, 1}), DomainError);
  CHECK_THROWS_AS(run_scenario({1.0, 0.5, 1, 10, 1}), DomainError);
  CHECK_THROWS_AS(run_scenario({1.0, 0.5, 10, 0, 1}), DomainError);
}

TEST_CASE("scenario against reference cells") {
  const SimSummary s = run_scenario({2.0, 0.5, 40, 1000, 42});
  CHECK(std::abs(s.mean - 0.3001) <= 0.004);
  CHECK(std::abs(s.bias - 0.0003) <= 0.004);
  CHECK(s.variance / 0.0010 >= 0.85 * (0.00095 / 0.0010));
  CHECK(s.variance / 0.0010 <= 1.18 * (0.00105 / 0.0010));

  const SimSummary t = run_scenario({10.0, 0.25, 120, 1000, 42});
  CHECK(std::abs(t.mean - 0.1285) <= 0.0011);
}

TEST_CASE("summaries are coherent") {
  for (const SimConfig& c : {SimConfig{0.5, 0.25, 10, 300, 1}, SimConfig{5.0, 0.75, 80, 300, 2},
                             SimConfig{1.0, 0.0, 20, 300, 3}, SimConfig{1.0, 1.0, 20, 300, 4}}) {
    const SimSummary s = run_scenario(c);
    const double r = c.reps;
    CHECK(s.mse >= 0.0);
    CHECK(s.variance >= 0.0);
    CHECK(std::abs(s.mse - (s.variance * (r - 1.0) / r + s.bias * s.bias)) <= 1e-12);
    if (c.lambda > 0.0) {
      CHECK(std::abs(s.truth - gamma_index(c.alpha, LambdaWeight(c.lambda))) <= 1e-8);
    } else {
      CHECK(s.truth == gamma_hoover(c.alpha));
    }
  }
}

TEST_CASE("single replication is flagged degenerate") {
  const SimSummary s = run_scenario({1.0, 0.5, 10, 1, 9});
  CHECK(s.degenerate);
  CHECK(s.variance == 0.0);
}

TEST_CASE("replications are reproducible in isolation") {
  const SimConfig c{1.0, 0.5, 15, 40, 77};
  const SimSummary s = run_scenario(c);
  std::vector<double> est;
  for (int r = 0; r < c.reps; ++r) {
    est.push_back(i_hat_fast(replication_sample(c, r), LambdaWeight(c.lambda)));
  }
  const McSummary m = summarize(est, s.truth);
  CHECK(m.mean == s.mean);
  CHECK(m.variance == s.variance);
}

TEST_CASE("grid results do not depend on the worker count") {
  std::vector<SimConfig> grid = table_grid(50, 42);
  REQUIRE(grid.size() == 75);
  grid.push_back(grid[3]);
  const auto serial = run_grid(grid, 1);
  const auto parallel = run_grid(grid, 4);
  REQUIRE(serial.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    REQUIRE(serial[i].summary.has_value());
    REQUIRE(parallel[i].summary.has_value());
    CHECK(same(*serial[i].summary, *parallel[i].summary));
    CHECK(serial[i].summary->config.alpha == grid[i].alpha);
    CHECK(std::isfinite(serial[i].summary->mean));
  }
  CHECK(same(*serial.back().summary, *serial[3].summary));
  CHECK_THROWS_AS(run_grid(std::vector<SimConfig>{}), DomainError);
}

TEST_CASE("grid collects failures without stopping") {
  const std::vector<SimConfig> grid{{1.0, 0.5, 10, 20, 1}, {-1.0, 0.5, 10, 20, 1},
                                    {2.0, 0.5, 10, 20, 1}};
  const auto out = run_grid(grid, 2);
  CHECK(out[0].summary.has_value());
  CHECK_FALSE(out[1].summary.has_value());
  CHECK_FALSE(out[1].error.empty());
  CHECK(out[2].summary.has_value());
}

TEST_CASE("bridging versus convex-combination estimator") {
  const BiasComparison c = compare_i_vs_j({5.0, 0.5, 80, 1000, 42});
  CHECK(std::isfinite(c.bias_i));
  CHECK(std::isfinite(c.bias_j));
  CHECK(std::abs(c.bias_i) < 0.01);
  CHECK(std::abs(c.bias_j) < 0.01);
  CHECK(c.truth_j >= c.truth_i);

  for (double l : {0.0, 1.0}) {
    const BiasComparison e = compare_i_vs_j({2.0, l, 20, 200, 3});
    CHECK(e.bias_i == e.bias_j);
  }
}

TEST_CASE("CSV and table output") {
  const std::vector<SimConfig> grid{{1.0, 0.5, 10, 30, 5}, {2.0, 0.25, 20, 1, 5}};
  std::vector<SimSummary> rows;
  for (const auto& o : run_grid(grid)) rows.push_back(*o.summary);

  std::ostringstream csv;
  write_summary_csv(csv, rows);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "alpha,lambda,n,R,seed,truth,mean,bias,mse,variance");
  std::string first;
  std::getline(lines, first);
  CHECK(first.rfind("1,0.5,10,30,5,", 0) == 0);

  std::ostringstream again;
  write_summary_csv(again, rows);
  CHECK(again.str() == csv.str());

  std::vector<BiasComparison> extra;
  for (const auto& c : grid) extra.push_back(compare_i_vs_j(c));
  std::ostringstream wide;
  write_summary_csv(wide, rows, extra);
  CHECK(wide.str().rfind("alpha,lambda,n,R,seed,truth,mean,bias,mse,variance,truth_j,bias_i,bias_j\n", 0) == 0);

  std::ostringstream table;
  write_summary_table(table, rows, 4);
  CHECK(table.str().find("truth") != std::string::npos);
  CHECK(table.str().find(" *") != std::string::npos);
  CHECK(table.str().find("degenerate") != std::string::npos);
}
