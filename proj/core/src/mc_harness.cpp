#include "ineq/mc_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "ineq/distributions.hpp"
#include "ineq/errors.hpp"
#include "ineq/estimators.hpp"
#include "ineq/index.hpp"
#include "ineq/random.hpp"

namespace ineq {
namespace {

// Calls job(i) for every i in [0, count) on a small pool. Each index is
// claimed exactly once and writes only its own slot, so results do not depend
// on scheduling.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& job) {
  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) job(i);
  };
  if (workers == 1) {
    loop();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(loop);
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void SimConfig::validate() const {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("SimConfig: alpha must be finite and > 0");
  }
  static_cast<void>(LambdaWeight{lambda});
  if (n < 2) throw DomainError("SimConfig: n must be >= 2");
  if (reps < 1) throw DomainError("SimConfig: reps must be >= 1");
}

double scenario_truth(double alpha, double lambda) {
  if (lambda == 0.0) return gamma_hoover(alpha);
  if (lambda == 1.0) return gamma_gini(alpha);
  return gamma_index(alpha, LambdaWeight(lambda));
}

Sample replication_sample(const SimConfig& config, std::uint64_t r) {
  Rng rng(derive_seed(config.seed, r));
  return gamma_sample(GammaParams(config.alpha, 1.0), rng,
                      static_cast<std::size_t>(config.n));
}

SimSummary run_scenario(const SimConfig& config) {
  config.validate();
  const double truth = scenario_truth(config.alpha, config.lambda);
  const LambdaWeight lambda(config.lambda);
  std::vector<double> estimates(static_cast<std::size_t>(config.reps));
  for (std::size_t r = 0; r < estimates.size(); ++r) {
    estimates[r] = i_hat_fast(replication_sample(config, r), lambda);
  }
  const McSummary s = summarize(estimates, truth);
  return {config, truth, s.mean, s.bias, s.mse, s.variance, s.degenerate};
}

std::vector<ScenarioOutcome> run_grid(std::span<const SimConfig> grid,
                                      unsigned threads) {
  if (grid.empty()) throw DomainError("run_grid: empty grid");
  std::vector<ScenarioOutcome> out(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    out[i].config = grid[i];
    try {
      out[i].summary = run_scenario(grid[i]);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  });
  return out;
}

BiasComparison compare_i_vs_j(const SimConfig& config) {
  config.validate();
  const double hoover = gamma_hoover(config.alpha);
  const double gini = gamma_gini(config.alpha);
  const LambdaWeight lambda(config.lambda);
  const double truth_i = scenario_truth(config.alpha, config.lambda);
  const double truth_j = j_index(hoover, gini, lambda);

  const auto reps = static_cast<std::size_t>(config.reps);
  std::vector<double> est_i(reps);
  std::vector<double> est_j(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const Sample s = replication_sample(config, r);
    const double h = h_hat(s);
    const double g = g_hat_fast(s);
    est_i[r] = i_hat_fast(s, lambda);
    est_j[r] = (1.0 - config.lambda) * h + config.lambda * g;
  }
  // Î and Ĵ coincide at the endpoints; reuse the same numbers so the two
  // biases agree exactly there.
  if (config.lambda == 0.0 || config.lambda == 1.0) est_j = est_i;
  const McSummary si = summarize(est_i, truth_i);
  const McSummary sj = summarize(est_j, truth_j);
  return {config, truth_i, truth_j, si.bias, sj.bias};
}

std::vector<ComparisonOutcome> compare_grid(std::span<const SimConfig> grid,
                                            unsigned threads) {
  if (grid.empty()) throw DomainError("compare_grid: empty grid");
  std::vector<ComparisonOutcome> out(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    out[i].config = grid[i];
    try {
      out[i].comparison = compare_i_vs_j(grid[i]);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  });
  return out;
}

std::vector<SimConfig> table_grid(int reps, std::uint64_t seed) {
  std::vector<SimConfig> grid;
  for (double alpha : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    for (double lambda : {0.25, 0.5, 0.75}) {
      for (int n : {10, 20, 40, 80, 120}) {
        grid.push_back({alpha, lambda, n, reps, seed});
      }
    }
  }
  return grid;
}

void write_summary_csv(std::ostream& os, std::span<const SimSummary> rows,
                       std::span<const BiasComparison> comparisons) {
  const bool extra = !comparisons.empty();
  if (extra && comparisons.size() != rows.size()) {
    throw DomainError("write_summary_csv: comparison rows do not match");
  }
  os << "alpha,lambda,n,R,seed,truth,mean,bias,mse,variance";
  if (extra) os << ",truth_j,bias_i,bias_j";
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SimSummary& s = rows[i];
    os << format_g17(s.config.alpha) << ',' << format_g17(s.config.lambda)
       << ',' << s.config.n << ',' << s.config.reps << ',' << s.config.seed
       << ',' << format_g17(s.truth) << ',' << format_g17(s.mean) << ','
       << format_g17(s.bias) << ',' << format_g17(s.mse) << ','
       << format_g17(s.variance);
    if (extra) {
      const BiasComparison& c = comparisons[i];
      os << ',' << format_g17(c.truth_j) << ',' << format_g17(c.bias_i) << ','
         << format_g17(c.bias_j);
    }
    os << '\n';
  }
}

void write_summary_table(std::ostream& os, std::span<const SimSummary> rows,
                         int digits,
                         std::span<const BiasComparison> comparisons) {
  const bool extra = !comparisons.empty();
  if (extra && comparisons.size() != rows.size()) {
    throw DomainError("write_summary_table: comparison rows do not match");
  }
  const int w = std::max(8, digits + 4);
  std::ostringstream line;
  line << std::setw(6) << "alpha" << std::setw(8) << "lambda" << std::setw(6)
       << "n" << std::setw(w) << "truth" << std::setw(w) << "mean"
       << std::setw(w) << "bias" << std::setw(w) << "mse" << std::setw(w)
       << "var";
  if (extra) line << std::setw(w) << "bias_i" << std::setw(w) << "bias_j";
  os << line.str() << '\n';
  bool any_degenerate = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SimSummary& s = rows[i];
    std::ostringstream row;
    row << std::fixed << std::setprecision(1) << std::setw(6) << s.config.alpha
        << std::setprecision(2) << std::setw(8) << s.config.lambda
        << std::setw(6) << s.config.n << std::setprecision(digits)
        << std::setw(w) << s.truth << std::setw(w) << s.mean << std::setw(w)
        << s.bias << std::setw(w) << s.mse << std::setw(w) << s.variance;
    if (extra) {
      row << std::setw(w) << comparisons[i].bias_i << std::setw(w)
          << comparisons[i].bias_j;
    }
    if (s.degenerate) {
      row << " *";
      any_degenerate = true;
    }
    os << row.str() << '\n';
  }
  if (any_degenerate) {
    os << "* degenerate: R = 1, variance reported as 0\n";
  }
}

}  // namespace ineq
