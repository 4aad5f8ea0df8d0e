#include "ineqcli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ineq/bias.hpp"
#include "ineq/errors.hpp"
#include "ineq/estimators.hpp"
#include "ineq/index.hpp"
#include "ineq/mc_harness.hpp"
#include "ineq/sample.hpp"
#include "ineqcli/csv.hpp"
#include "ineqcli/svg.hpp"

namespace ineqcli {
namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string lambda_label(double l) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", l);
  return buf;
}

int digits_or(const GlobalOptions& g, int fallback) {
  return g.digits.value_or(fallback);
}

bool open_output(const std::string& path, std::ofstream& file,
                 std::ostream& err) {
  file.open(path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int cmd_index(const IndexArgs& args, const GlobalOptions& global,
              std::ostream& out, std::ostream& err) {
  const int digits = digits_or(global, 6);
  const int modes = static_cast<int>(args.lambda.has_value()) +
                    static_cast<int>(args.grid.has_value()) +
                    static_cast<int>(args.hoover) + static_cast<int>(args.gini);
  if (modes != 1) {
    err << "error: index needs exactly one of --lambda, --grid, --hoover, "
           "--gini\n";
    return kUsage;
  }
  double current_lambda = args.lambda.value_or(args.hoover ? 0.0 : 1.0);
  try {
    if (args.hoover) {
      out << fixed(ineq::gamma_hoover(args.alpha), digits) << '\n';
    } else if (args.gini) {
      out << fixed(ineq::gamma_gini(args.alpha), digits) << '\n';
    } else if (args.lambda) {
      out << fixed(ineq::gamma_index(args.alpha, ineq::LambdaWeight(*args.lambda)),
                   digits)
          << '\n';
    } else {
      const double alpha = args.alpha;
      ineq::LambdaEvaluator eval{
          [&](double l) {
            current_lambda = l;
            return ineq::gamma_index(alpha, ineq::LambdaWeight(l));
          },
          [&] { return ineq::gamma_hoover(alpha); },
          [&] { return ineq::gamma_gini(alpha); }};
      const auto path =
          ineq::lambda_path(eval, static_cast<std::size_t>(*args.grid));
      out << "lambda,index\n";
      for (const auto& p : path) {
        out << lambda_label(p.lambda) << ',' << fixed(p.value, digits) << '\n';
      }
    }
  } catch (const ineq::DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: alpha=" << args.alpha << " lambda=" << current_lambda
        << ": " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_estimate(const EstimateArgs& args, const GlobalOptions& global,
                 std::ostream& out, std::ostream& err) {
  const int digits = digits_or(global, 3);
  if (args.format != "table" && args.format != "csv") {
    err << "error: --format must be 'table' or 'csv'\n";
    return kUsage;
  }
  if (!args.svg.empty() && args.path < 2) {
    err << "error: --svg needs --path with at least 2 points\n";
    return kUsage;
  }
  try {
    const DataColumn column = read_column_file(args.input, args.column);
    if (column.skipped > 0 && !global.quiet) {
      err << "note: skipped " << column.skipped
          << " non-numeric or empty cell(s) in column '" << column.name
          << "'\n";
    }
    const ineq::Sample sample(column.values);
    const double h = ineq::h_hat(sample);
    const double g = ineq::g_hat_fast(sample);

    std::vector<std::pair<std::string, double>> rows;
    rows.emplace_back("Hoover", h);
    for (double l : args.lambdas) {
      rows.emplace_back("I(" + lambda_label(l) + ")",
                        ineq::i_hat_fast(sample, ineq::LambdaWeight(l)));
    }
    rows.emplace_back("Gini", g);

    if (args.format == "csv") {
      out << "measure,value\n";
      for (const auto& [name, v] : rows) out << name << ',' << fixed(v, digits) << '\n';
    } else {
      std::size_t width = 7;
      for (const auto& r : rows) width = std::max(width, r.first.size() + 2);
      out << "Measure" << std::string(width - 7, ' ') << "Value\n";
      for (const auto& [name, v] : rows) {
        out << name << std::string(width - name.size(), ' ') << fixed(v, digits)
            << '\n';
      }
    }

    if (args.path >= 2) {
      ineq::LambdaEvaluator eval{
          [&](double l) { return ineq::i_hat_fast(sample, ineq::LambdaWeight(l)); },
          [&] { return h; }, [&] { return g; }};
      const auto path =
          ineq::lambda_path(eval, static_cast<std::size_t>(args.path));
      out << "\nlambda,i_hat\n";
      for (const auto& p : path) {
        out << lambda_label(p.lambda) << ',' << fixed(p.value, digits) << '\n';
      }
      if (!args.svg.empty()) {
        std::ofstream file;
        if (!open_output(args.svg, file, err)) return kFailure;
        write_path_svg(file, path, "I_lambda path: " + column.name);
      }
    }
  } catch (const CsvError& e) {
    err << "error: " << args.input << ": " << e.what() << '\n';
    return kFailure;
  } catch (const ineq::DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_bias(const BiasArgs& args, const GlobalOptions& global,
             std::ostream& out, std::ostream& err) {
  const int digits = digits_or(global, 6);
  try {
    const ineq::BiasQuery q(args.alpha, args.lambda, args.n);
    const double truth = ineq::scenario_truth(q.alpha, q.lambda);
    const double expected = ineq::expected_i_hat(q);
    const double b = q.lambda == 1.0 ? 0.0 : expected - truth;
    out << "truth     " << fixed(truth, digits) << '\n'
        << "expected  " << fixed(expected, digits) << '\n'
        << "bias      " << fixed(b, digits) << '\n';
  } catch (const ineq::DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: alpha=" << args.alpha << " lambda=" << args.lambda
        << " n=" << args.n << ": " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_simulate(const SimulateArgs& args, const GlobalOptions& global,
                 std::ostream& out, std::ostream& err) {
  const int digits = digits_or(global, 4);
  std::vector<ineq::SimConfig> grid;
  for (double a : args.alphas) {
    for (double l : args.lambdas) {
      for (int n : args.ns) grid.push_back({a, l, n, args.reps, args.seed});
    }
  }
  if (grid.empty()) {
    err << "error: empty scenario grid\n";
    return kUsage;
  }
  try {
    for (const auto& c : grid) c.validate();
  } catch (const ineq::DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const auto outcomes = ineq::run_grid(grid, args.threads);
  std::vector<ineq::ComparisonOutcome> comparisons;
  if (args.compare_j) comparisons = ineq::compare_grid(grid, args.threads);

  std::vector<ineq::SimSummary> rows;
  std::vector<ineq::BiasComparison> extra;
  int failures = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    std::string error = o.error;
    if (error.empty() && args.compare_j && !comparisons[i].comparison) {
      error = comparisons[i].error;
    }
    if (!error.empty()) {
      ++failures;
      err << "error: scenario alpha=" << o.config.alpha
          << " lambda=" << o.config.lambda << " n=" << o.config.n << ": "
          << error << '\n';
      continue;
    }
    rows.push_back(*o.summary);
    if (args.compare_j) extra.push_back(*comparisons[i].comparison);
  }

  ineq::write_summary_table(out, rows, digits, extra);
  if (!global.quiet && args.reps == 1) {
    err << "note: R = 1, variance is degenerate and reported as 0\n";
  }

  if (!args.out.empty()) {
    std::ofstream file;
    if (!open_output(args.out, file, err)) return kFailure;
    ineq::write_summary_csv(file, rows, extra);
  }

  if (!args.dump_samples.empty()) {
    std::ofstream file;
    if (!open_output(args.dump_samples, file, err)) return kFailure;
    std::vector<std::vector<double>> columns;
    std::size_t longest = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& c = grid[i];
      file << (i ? "," : "") << "a" << lambda_label(c.alpha) << "_l"
           << lambda_label(c.lambda) << "_n" << c.n;
      const ineq::Sample s = ineq::replication_sample(c, 0);
      columns.emplace_back(s.values().begin(), s.values().end());
      longest = std::max(longest, columns.back().size());
    }
    file << '\n';
    for (std::size_t r = 0; r < longest; ++r) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) file << ',';
        if (r < columns[i].size()) file << g17(columns[i][r]);
      }
      file << '\n';
    }
  }
  return failures > 0 ? kFailure : kOk;
}

}  // namespace ineqcli
