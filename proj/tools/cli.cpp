#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "salpeter/bounds.hpp"
#include "salpeter/diagnostics.hpp"
#include "salpeter/numerics.hpp"
#include "salpeter/operators.hpp"
#include "salpeter/potentials.hpp"
#include "salpeter/spectra.hpp"

namespace salpeter::cli {

namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& precondition) {
  if (!ok) throw UsageError("violated precondition: " + precondition);
}

void validate(const RunConfig& c) {
  require(c.potential == "hellmann" || c.potential == "exponential-well",
          "potential must be 'hellmann' or 'exponential-well'");
  require(c.kappa >= 0.0, "kappa >= 0");
  require(c.b > 0.0, "b > 0");
  if (c.potential == "exponential-well") require(c.v0 > 0.0, "v0 > 0");
  require(c.m >= 0.0, "m >= 0");
  if (c.m1) require(*c.m1 >= 0.0, "m1 >= 0");
  if (c.m2) require(*c.m2 >= 0.0, "m2 >= 0");
  require(c.ell >= 0, "ell >= 0");
  require(c.beta > -0.5, "beta > -1/2");
  require(c.mu > 0.0, "mu > 0");
  require(c.dim >= 1, "dim >= 1");
  require(c.states >= 1, "states >= 1");
  require(c.mode == "paper" || c.mode == "best", "mode must be 'paper' or 'best'");
  if (c.command == Command::Profile) {
    require(c.r_min > 0.0 && c.r_max > c.r_min, "0 < rmin < rmax");
    require(c.samples >= 2, "samples >= 2");
  }
  if (c.command == Command::Optimize) {
    require(c.mu_min > 0.0 && c.mu_max >= c.mu_min, "0 < mu-min <= mu-max");
    require(c.beta_min > -0.5 && c.beta_max >= c.beta_min, "-1/2 < beta-min <= beta-max");
    require(c.target >= 0 && c.target < c.dim, "0 <= state < dim");
  }
}

PotentialSpec make_potential(const RunConfig& c) {
  if (c.potential == "exponential-well") return PotentialSpec::exponential_well(c.v0, c.b);
  return PotentialSpec::hellmann(c.kappa, c.upsilon, c.b);
}

MassConfig make_masses(const RunConfig& c) {
  return MassConfig(c.m1.value_or(c.m), c.m2.value_or(c.m));
}

double equal_mass(const RunConfig& c, const char* command) {
  const MassConfig masses = make_masses(c);
  if (!masses.equal())
    throw UsageError(std::string(command) + " requires equal masses (single --m)");
  return masses.m1;
}

int run_classify(const RunConfig& c, std::ostream& out) {
  const PotentialProfile profile = classify(make_potential(c));
  if (c.format == OutputFormat::Csv) {
    out << "category,bounded_below,origin,r_star,v_min\n";
    out << to_string(profile.category) << ',' << (profile.bounded_below ? "true" : "false")
        << ',' << to_string(profile.origin) << ',';
    if (profile.minimum) out << fmt6(profile.minimum->r_star) << ',' << fmt6(profile.minimum->v_min);
    else out << ',';
    out << '\n';
    return 0;
  }
  out << "category: " << to_string(profile.category) << "; "
      << (profile.bounded_below ? "bounded below" : "unbounded below") << "; "
      << to_string(profile.origin) << '\n';
  if (profile.minimum)
    out << "minimum: r* = " << fmt6(profile.minimum->r_star)
        << ", V_min = " << fmt6(profile.minimum->v_min) << '\n';
  return 0;
}

int run_bounds(const RunConfig& c, std::ostream& out) {
  const double m = equal_mass(c, "bounds");
  const BoundsMode mode = c.mode == "paper" ? BoundsMode::Paper : BoundsMode::Best;
  const BoundsReport report = hellmann_lower_bound(make_potential(c), m, mode);
  if (c.format == OutputFormat::Csv) {
    out << "bounded_below,lower_bound,binding,method,alpha_eff,mode\n";
    out << (report.bounded_below ? "true" : "false") << ',';
    if (report.lower_bound)
      out << fmt6(*report.lower_bound) << ',' << fmt6(*report.lower_bound - 2.0 * m);
    else
      out << ',';
    out << ',' << to_string(report.method) << ',' << fmt6(report.alpha_eff) << ','
        << to_string(report.mode) << '\n';
    return 0;
  }
  out << "bounded below: " << (report.bounded_below ? "yes" : "no") << '\n';
  if (report.lower_bound) {
    out << "lower bound (energy): " << fmt6(*report.lower_bound) << '\n';
    out << "lower bound (binding): " << fmt6(*report.lower_bound - 2.0 * m) << '\n';
    out << "method: " << to_string(report.method) << '\n';
  }
  out << "alpha_eff: " << fmt6(report.alpha_eff) << '\n';
  out << "mode: " << to_string(report.mode) << '\n';
  return 0;
}

int run_solve(const RunConfig& c, std::ostream& out) {
  const PotentialSpec spec = make_potential(c);
  const MassConfig masses = make_masses(c);
  const TrialBasis basis(c.ell, c.beta, c.mu, c.dim);
  const int n_states = std::min(c.states, c.dim);
  const SpectralResult result = solve(basis, masses, spec, n_states);

  if (c.format == OutputFormat::Csv) out << "n_r,ell,eigenvalue,binding,virial_residual\n";
  else {
    out << "# " << c.potential << " kappa=" << fmt6(c.kappa) << " upsilon=" << fmt6(c.upsilon)
        << " b=" << fmt6(c.b) << " | m1=" << fmt6(masses.m1) << " m2=" << fmt6(masses.m2)
        << " | ell=" << c.ell << " beta=" << fmt6(c.beta) << " mu=" << fmt6(c.mu)
        << " dim=" << c.dim << '\n';
    out << "n_r  ell  eigenvalue  binding  virial_residual\n";
  }
  for (int k = 0; k < n_states; ++k) {
    const VirialReport virial = virial_check(result.state(k), masses, spec);
    const char sep = c.format == OutputFormat::Csv ? ',' : ' ';
    if (c.format == OutputFormat::Csv) out << k << sep << c.ell << sep;
    else out << k << "    " << c.ell << "    ";
    out << fmt6(result.eigenvalues[k]) << sep << fmt6(result.binding[k]) << sep
        << fmt6(virial.residual) << '\n';
  }
  return 0;
}

int run_table1(const RunConfig& c, std::ostream& out) {
  const double m = equal_mass(c, "table1");
  require(m > 0.0, "table1 requires m > 0");
  const MassConfig masses(m);
  const double mu = m, beta = 1.0, b = m;
  // d = 40 leaves the n_r = 2 entries converged past the reference
  // values; smaller trial spaces truncate them a little high.
  const int dim = c.dim_explicit ? c.dim : 40;
  const BoundsMode mode = c.mode == "paper" ? BoundsMode::Paper : BoundsMode::Best;

  const std::vector<std::pair<double, double>> columns = {{0.5, 0.5}, {1.0, -1.0}, {1.0, -2.0}};
  const std::vector<SectorLevel> sectors = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};

  struct Row {
    int n_r, ell, column;
    double binding, residual;
  };
  std::vector<Row> rows;
  std::vector<double> lower_bounds;

  for (size_t col = 0; col < columns.size(); ++col) {
    const PotentialSpec spec = PotentialSpec::hellmann(columns[col].first, columns[col].second, b);
    std::map<int, SpectralResult> per_ell;
    for (const auto& s : sectors) {
      if (!per_ell.count(s.ell))
        per_ell.emplace(s.ell, solve(TrialBasis(s.ell, beta, mu, dim), masses, spec, dim));
      const SpectralResult& res = per_ell.at(s.ell);
      const VirialReport virial = virial_check(res.state(s.n_r), masses, spec);
      rows.push_back({s.n_r, s.ell, static_cast<int>(col) + 1, res.binding[s.n_r],
                      virial.residual});
    }
    const BoundsReport bound = hellmann_lower_bound(spec, m, mode);
    lower_bounds.push_back(*bound.lower_bound - 2.0 * m);
  }

  // sector-major ordering, column cycling fastest
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b_) {
    const auto key = [&](const Row& r) {
      for (size_t i = 0; i < sectors.size(); ++i)
        if (sectors[i].n_r == r.n_r && sectors[i].ell == r.ell) return i;
      return sectors.size();
    };
    return key(a) < key(b_) || (key(a) == key(b_) && a.column < b_.column);
  });

  if (c.format == OutputFormat::Csv) {
    out << "n_r,ell,column,binding,virial_residual\n";
    for (const Row& r : rows)
      out << r.n_r << ',' << r.ell << ',' << r.column << ',' << fmt6(r.binding) << ','
          << fmt6(r.residual) << '\n';
    for (size_t col = 0; col < lower_bounds.size(); ++col)
      out << ",," << col + 1 << ',' << fmt6(lower_bounds[col]) << ",\n";
    return 0;
  }

  out << "# binding energies E_k - 2m [units of m]; b = mu = m, beta = 1, dim = " << dim << '\n';
  out << "n_r  ell  column  binding     virial_residual\n";
  for (const Row& r : rows)
    out << r.n_r << "    " << r.ell << "    " << r.column << "       " << fmt6(r.binding)
        << "   " << fmt6(r.residual) << '\n';
  out << "lower bounds (mode=" << c.mode << "):";
  for (double lb : lower_bounds) out << ' ' << fmt6(lb);
  out << '\n';
  return 0;
}

int run_count(const RunConfig& c, std::ostream& out) {
  const double m = equal_mass(c, "count");
  const CountReport report = count_bound(make_potential(c), m);
  if (c.format == OutputFormat::Csv) {
    out << "condition_ok,n_bound,c_used,failure_reason\n";
    out << (report.condition_ok ? "true" : "false") << ',';
    if (report.n_bound) out << fmt6(*report.n_bound);
    out << ',' << report.c_used << ',';
    if (report.failure_reason) out << '"' << *report.failure_reason << '"';
    out << '\n';
    return 0;
  }
  out << "condition (L): " << (report.condition_ok ? "satisfied" : "violated") << '\n';
  if (report.failure_reason) out << "reason: " << *report.failure_reason << '\n';
  if (report.n_bound) {
    out << "N_bound: " << fmt6(*report.n_bound) << '\n';
    out << "at most " << static_cast<long>(std::floor(*report.n_bound)) << " bound states\n";
  }
  out << "C_used: " << report.c_used << '\n';
  return 0;
}

int run_optimize(const RunConfig& c, std::ostream& out) {
  const PotentialSpec spec = make_potential(c);
  const MassConfig masses = make_masses(c);
  const OptimizationOutcome outcome =
      optimize_parameters(masses, spec, c.ell, c.dim, c.target, {c.mu_min, c.mu_max},
                          {c.beta_min, c.beta_max});
  if (c.format == OutputFormat::Csv) {
    out << "best_mu,best_beta,best_value,binding,evaluations\n";
    out << fmt6(outcome.best_mu) << ',' << fmt6(outcome.best_beta) << ','
        << fmt6(outcome.best_value) << ',' << fmt6(outcome.best_value - masses.total()) << ','
        << outcome.evaluations << '\n';
    return 0;
  }
  out << "best mu: " << fmt6(outcome.best_mu) << '\n';
  out << "best beta: " << fmt6(outcome.best_beta) << '\n';
  out << "best eigenvalue: " << fmt6(outcome.best_value) << '\n';
  out << "best binding: " << fmt6(outcome.best_value - masses.total()) << '\n';
  out << "evaluations: " << outcome.evaluations << '\n';
  return 0;
}

int run_profile(const RunConfig& c, std::ostream& out) {
  const auto samples = profile_samples(make_potential(c), c.r_min, c.r_max, c.samples);
  out << "r,V\n";
  for (const auto& [r, v] : samples) out << fmt6(r) << ',' << fmt6(v) << '\n';
  return 0;
}

}  // namespace

ParseOutcome parse_config(int argc, const char* const* argv, std::ostream& out,
                          std::ostream& err) {
  RunConfig config;
  CLI::App app{"two-sided spectral tools for the semirelativistic (spinless-Salpeter) problem",
               "salpeter"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value configuration file");
  app.allow_config_extras(false);

  std::string format = "text";
  std::string output;
  double m1 = -1.0, m2 = -1.0;

  app.add_option("--potential", config.potential, "hellmann | exponential-well")
      ->capture_default_str();
  app.add_option("--kappa", config.kappa, "Coulomb coupling (>= 0)")->capture_default_str();
  app.add_option("--upsilon", config.upsilon, "Yukawa coupling")->capture_default_str();
  app.add_option("--b", config.b, "potential slope (> 0, units of m)")->capture_default_str();
  app.add_option("--v0", config.v0, "well depth (> 0, exponential-well)")->capture_default_str();
  app.add_option("--m", config.m, "constituent mass (equal masses)")->capture_default_str();
  app.add_option("--m1", m1, "first constituent mass");
  app.add_option("--m2", m2, "second constituent mass");
  app.add_option("--ell", config.ell, "orbital angular momentum (>= 0)")->capture_default_str();
  app.add_option("--beta", config.beta, "basis shape parameter (> -1/2)")->capture_default_str();
  app.add_option("--mu", config.mu, "basis inverse length (> 0)")->capture_default_str();
  auto* dim_opt =
      app.add_option("--dim", config.dim, "trial-space dimension (>= 1)")->capture_default_str();
  app.add_option("--states", config.states, "number of states to report")->capture_default_str();
  app.add_option("--mode", config.mode, "lower-bound mode: paper | best")->capture_default_str();
  app.add_option("--format", format, "output format: text | csv")->capture_default_str();
  app.add_option("--output", output, "write output to this file instead of stdout");
  app.add_option("--rmin", config.r_min, "profile: smallest radius (> 0)")->capture_default_str();
  app.add_option("--rmax", config.r_max, "profile: largest radius")->capture_default_str();
  app.add_option("--samples", config.samples, "profile: sample count (>= 2)")
      ->capture_default_str();
  app.add_option("--mu-min", config.mu_min, "optimize: lower mu bound")->capture_default_str();
  app.add_option("--mu-max", config.mu_max, "optimize: upper mu bound")->capture_default_str();
  app.add_option("--beta-min", config.beta_min, "optimize: lower beta bound")
      ->capture_default_str();
  app.add_option("--beta-max", config.beta_max, "optimize: upper beta bound")
      ->capture_default_str();
  app.add_option("--state", config.target, "optimize: target eigenvalue index")
      ->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "shape/boundedness of a Hellmann spec");
  auto* bounds_cmd = app.add_subcommand("bounds", "analytic spectral lower bound");
  auto* solve_cmd = app.add_subcommand("solve", "variational upper bounds in one ell sector");
  auto* table1_cmd = app.add_subcommand("table1",
                                        "reference Hellmann binding-energy table (b = mu = m, "
                                        "beta = 1, dim = 40 unless --dim) with lower-bound row");
  auto* count_cmd = app.add_subcommand("count", "bound-state counting bound");
  auto* optimize_cmd = app.add_subcommand("optimize", "minimize E_k over (mu, beta)");
  auto* profile_cmd = app.add_subcommand("profile", "emit (r, V) samples as CSV");
  for (auto* sub : {classify_cmd, bounds_cmd, solve_cmd, table1_cmd, count_cmd, optimize_cmd,
                    profile_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {std::nullopt, 0};
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return {std::nullopt, 0};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return {std::nullopt, 2};
  }

  if (classify_cmd->parsed()) config.command = Command::Classify;
  else if (bounds_cmd->parsed()) config.command = Command::Bounds;
  else if (solve_cmd->parsed()) config.command = Command::Solve;
  else if (table1_cmd->parsed()) config.command = Command::Table1;
  else if (count_cmd->parsed()) config.command = Command::Count;
  else if (optimize_cmd->parsed()) config.command = Command::Optimize;
  else config.command = Command::Profile;

  if (format == "csv") config.format = OutputFormat::Csv;
  else if (format == "text") config.format = OutputFormat::Text;
  else {
    err << "error: violated precondition: format must be 'text' or 'csv'\n";
    return {std::nullopt, 2};
  }
  if (!output.empty()) config.output = output;
  if (app.count("--m1") > 0) config.m1 = m1;
  if (app.count("--m2") > 0) config.m2 = m2;
  config.dim_explicit = dim_opt->count() > 0;

  try {
    validate(config);
    kinetic_start_order();  // reject a malformed SALPETER_QUAD_ORDER up front
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return {std::nullopt, 2};
  }
  return {config, 0};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output) {
    file.open(*config.output);
    if (!file) {
      err << "error: cannot open output file '" << *config.output << "'\n";
      return 1;
    }
    sink = &file;
  }

  try {
    switch (config.command) {
      case Command::Classify: return run_classify(config, *sink);
      case Command::Bounds: return run_bounds(config, *sink);
      case Command::Solve: return run_solve(config, *sink);
      case Command::Table1: return run_table1(config, *sink);
      case Command::Count: return run_count(config, *sink);
      case Command::Optimize: return run_optimize(config, *sink);
      case Command::Profile: return run_profile(config, *sink);
    }
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: violated precondition: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "numeric error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseOutcome outcome = parse_config(argc, argv, out, err);
  if (!outcome.config) return outcome.exit_code;
  return run(*outcome.config, out, err);
}

}  // namespace salpeter::cli
