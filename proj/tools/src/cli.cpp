#include <CLI11.hpp>

#include <ostream>

#include "ineqcli/commands.hpp"

namespace ineqcli {

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hoover-Gini bridging inequality index toolkit", "ineq"};
  app.require_subcommand(1);

  GlobalOptions global;
  int digits = -1;
  app.add_option("--digits", digits, "Decimal places in printed values")
      ->check(CLI::Range(0, 17));
  app.add_flag("--quiet", global.quiet, "Suppress diagnostic notes");

  IndexArgs index;
  auto* idx = app.add_subcommand("index", "Index of a Gamma(alpha) population");
  idx->fallthrough();
  idx->add_option("--alpha", index.alpha, "Gamma shape")
      ->required()
      ->check(CLI::PositiveNumber);
  idx->add_option("--lambda", index.lambda, "Weight in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  idx->add_option("--grid", index.grid, "Print a CSV over G evenly spaced lambdas")
      ->check(CLI::Range(2, 100000));
  idx->add_flag("--hoover", index.hoover, "Closed-form Hoover index");
  idx->add_flag("--gini", index.gini, "Closed-form Gini coefficient");

  EstimateArgs estimate;
  auto* est = app.add_subcommand("estimate", "Plug-in estimates from a CSV column");
  est->fallthrough();
  est->add_option("--input", estimate.input, "CSV file with a header row")
      ->required();
  est->add_option("--column", estimate.column, "Column name")->required();
  est->add_option("--lambda", estimate.lambdas, "Weights to report")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  est->add_option("--path", estimate.path, "Also print a G-point lambda path")
      ->check(CLI::Range(2, 100000));
  est->add_option("--svg", estimate.svg, "Write the lambda path as an SVG plot");
  est->add_option("--format", estimate.format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));

  BiasArgs bias;
  auto* bia = app.add_subcommand("bias", "Analytic bias under a gamma population");
  bia->fallthrough();
  bia->add_option("--alpha", bias.alpha, "Gamma shape")
      ->required()
      ->check(CLI::PositiveNumber);
  bia->add_option("--lambda", bias.lambda, "Weight in [0, 1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  bia->add_option("--n", bias.n, "Sample size")->required()->check(
      CLI::Range(2, 1000000));

  SimulateArgs sim;
  auto* simc = app.add_subcommand("simulate", "Monte Carlo study over a grid");
  simc->fallthrough();
  simc->add_option("--alpha", sim.alphas, "Gamma shapes")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  simc->add_option("--lambda", sim.lambdas, "Weights")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  simc->add_option("--n", sim.ns, "Sample sizes")
      ->delimiter(',')
      ->check(CLI::Range(2, 1000000));
  simc->add_option("--reps", sim.reps, "Replications per scenario")
      ->check(CLI::Range(1, 100000000));
  simc->add_option("--seed", sim.seed, "Base seed");
  simc->add_option("--out", sim.out, "Write the summary CSV here");
  simc->add_flag("--compare-j", sim.compare_j,
                 "Add the convex-combination estimator's bias");
  simc->add_option("--dump-samples", sim.dump_samples,
                   "Write replication 0 of every scenario as a wide CSV");
  simc->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (digits >= 0) global.digits = digits;

  if (idx->parsed()) return cmd_index(index, global, out, err);
  if (est->parsed()) return cmd_estimate(estimate, global, out, err);
  if (bia->parsed()) return cmd_bias(bias, global, out, err);
  return cmd_simulate(sim, global, out, err);
}

}  // namespace ineqcli
