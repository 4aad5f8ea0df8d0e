#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ineqcli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct GlobalOptions {
  std::optional<int> digits;  ///< overrides each command's default precision
  bool quiet = false;         ///< suppress diagnostics on the error stream
};

struct IndexArgs {
  double alpha = 0.0;
  std::optional<double> lambda;
  std::optional<int> grid;
  bool hoover = false;
  bool gini = false;
};

struct EstimateArgs {
  std::string input;
  std::string column;
  std::vector<double> lambdas{0.25, 0.5, 0.75};
  int path = 0;  ///< grid size of the λ-path CSV; 0 disables it
  std::string svg;
  std::string format = "table";  ///< "table" or "csv"
};

struct BiasArgs {
  double alpha = 0.0;
  double lambda = 0.0;
  int n = 0;
};

struct SimulateArgs {
  std::vector<double> alphas{0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<double> lambdas{0.25, 0.5, 0.75};
  std::vector<int> ns{10, 20, 40, 80, 120};
  int reps = 1000;
  std::uint64_t seed = 42;
  std::string out;
  bool compare_j = false;
  std::string dump_samples;
  unsigned threads = 0;
};

int cmd_index(const IndexArgs& args, const GlobalOptions& global,
              std::ostream& out, std::ostream& err);
int cmd_estimate(const EstimateArgs& args, const GlobalOptions& global,
                 std::ostream& out, std::ostream& err);
int cmd_bias(const BiasArgs& args, const GlobalOptions& global,
             std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, const GlobalOptions& global,
                 std::ostream& out, std::ostream& err);

/// Parses a full command line and dispatches to the matching command.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ineqcli
