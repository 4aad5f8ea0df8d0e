#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ineq/sample.hpp"

namespace ineq {

/// One Monte Carlo scenario: R samples of size n from Gamma(alpha, 1).
struct SimConfig {
  double alpha = 1.0;
  double lambda = 0.5;
  int n = 10;
  int reps = 1000;
  std::uint64_t seed = 42;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct SimSummary {
  SimConfig config;
  double truth;
  double mean;
  double bias;
  double mse;
  double variance;
  /// Set when reps == 1; variance is then 0 by convention.
  bool degenerate;
};

/// I_λ for a gamma population, taking the closed forms at λ = 0 and 1.
double scenario_truth(double alpha, double lambda);

/// The sample used by replication `r`. Its generator is seeded from
/// (config.seed, r) alone, so any replication can be regenerated in isolation.
Sample replication_sample(const SimConfig& config, std::uint64_t r);

SimSummary run_scenario(const SimConfig& config);

/// Result slot for one grid entry; exactly one of summary / error is set.
struct ScenarioOutcome {
  SimConfig config;
  std::optional<SimSummary> summary;
  std::string error;
};

/// Runs every scenario on up to `threads` workers (0 = hardware
/// concurrency). Outcomes come back in input order and do not depend on the
/// worker count. A failing scenario is recorded, not rethrown. Throws
/// DomainError on an empty grid.
std::vector<ScenarioOutcome> run_grid(std::span<const SimConfig> grid,
                                      unsigned threads = 0);

/// MC biases of Î_λ against I_λ and of Ĵ_λ against J_λ on shared samples.
struct BiasComparison {
  SimConfig config;
  double truth_i;
  double truth_j;
  double bias_i;
  double bias_j;
};

BiasComparison compare_i_vs_j(const SimConfig& config);

struct ComparisonOutcome {
  SimConfig config;
  std::optional<BiasComparison> comparison;
  std::string error;
};

std::vector<ComparisonOutcome> compare_grid(std::span<const SimConfig> grid,
                                            unsigned threads = 0);

/// The reference simulation design: α ∈ {0.5, 1, 2, 5, 10}, λ ∈ {0.25, 0.5, 0.75},
/// n ∈ {10, 20, 40, 80, 120}, in that nesting order.
std::vector<SimConfig> table_grid(int reps, std::uint64_t seed);

/// CSV with header alpha,lambda,n,R,seed,truth,mean,bias,mse,variance and
/// round-trip precision. When `comparisons` is non-empty it must line up
/// with `rows`, and truth_j,bias_i,bias_j columns are appended.
void write_summary_csv(std::ostream& os, std::span<const SimSummary> rows,
                       std::span<const BiasComparison> comparisons = {});

/// Aligned table in the column order alpha, lambda, n, truth, mean, bias,
/// mse, var. Degenerate rows are marked with '*'.
void write_summary_table(std::ostream& os, std::span<const SimSummary> rows,
                         int digits,
                         std::span<const BiasComparison> comparisons = {});

}  // namespace ineq
