#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace salpeter::cli {

enum class Command { Classify, Bounds, Solve, Table1, Count, Optimize, Profile };
enum class OutputFormat { Text, Csv };

/// Fully resolved invocation: command-line flags override config-file
/// keys, which override the defaults below.
struct RunConfig {
  Command command = Command::Solve;

  std::string potential = "hellmann";  // hellmann | exponential-well
  double kappa = 0.0;
  double upsilon = 0.0;
  double b = 1.0;
  double v0 = 1.0;

  double m = 1.0;
  std::optional<double> m1;
  std::optional<double> m2;

  int ell = 0;
  double beta = 1.0;
  double mu = 1.0;
  int dim = 32;
  bool dim_explicit = false;  // table1 picks its own dimension unless --dim is given
  int states = 4;

  std::string mode = "best";  // paper | best
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> output;

  double r_min = 0.01;  // profile
  double r_max = 20.0;
  int samples = 200;

  double mu_min = 0.2;  // optimize
  double mu_max = 5.0;
  double beta_min = 1.0;
  double beta_max = 1.0;
  int target = 0;
};

struct ParseOutcome {
  std::optional<RunConfig> config;  // engaged when a command should run
  int exit_code = 0;                // meaningful when config is empty
};

/// Parses argv (and an optional --config file). Usage problems are
/// reported on err with exit code 2; --help prints on out with code 0.
ParseOutcome parse_config(int argc, const char* const* argv, std::ostream& out,
                          std::ostream& err);

/// Executes a parsed configuration. Returns 0 on success, 1 on numeric
/// failure, 2 on domain violations.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace salpeter::cli
