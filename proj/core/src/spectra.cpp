#include "salpeter/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "salpeter/numerics.hpp"

namespace salpeter {

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> decompose(const Eigen::MatrixXd& h,
                                                         bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.compute(h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("spectra: eigendecomposition failed");
  return es;
}

}  // namespace

SpectralResult solve(const TrialBasis& basis, const MassConfig& masses,
                     const PotentialSpec& spec, int n_states) {
  if (n_states < 1 || n_states > basis.dim)
    throw std::domain_error("solve: requires 1 <= n_states <= dim");
  const OperatorMatrix h = hamiltonian_matrix(basis, masses, spec);
  const auto es = decompose(h.entries, true);

  const double hnorm = h.entries.norm();
  for (int k = 0; k < n_states; ++k) {
    const double residual =
        (h.entries * es.eigenvectors().col(k) - es.eigenvalues()[k] * es.eigenvectors().col(k))
            .norm();
    if (residual > 1e-9 * std::max(hnorm, 1e-300)) {
      std::ostringstream os;
      os << "solve: eigenpair residual " << residual << " exceeds 1e-9 * ||H|| = "
         << 1e-9 * hnorm << " for state " << k;
      throw NumericError(os.str());
    }
  }

  SpectralResult result{basis, masses, spec, es.eigenvalues().head(n_states),
                        es.eigenvectors().leftCols(n_states),
                        es.eigenvalues().head(n_states).array() - masses.total()};
  return result;
}

std::vector<BindingEntry> binding_table(const MassConfig& masses, const PotentialSpec& spec,
                                        double beta, double mu, int dim,
                                        std::span<const SectorLevel> sectors) {
  std::vector<BindingEntry> table;
  if (sectors.empty()) return table;

  std::set<int> ells;
  for (const auto& s : sectors) {
    if (s.n_r < 0 || s.n_r >= dim)
      throw std::domain_error("binding_table: requires 0 <= n_r < dim for every sector");
    if (s.ell < 0) throw std::domain_error("binding_table: requires ell >= 0");
    ells.insert(s.ell);
  }

  std::map<int, SpectralResult> solved;
  for (int ell : ells)
    solved.emplace(ell, solve(TrialBasis(ell, beta, mu, dim), masses, spec, dim));

  table.reserve(sectors.size());
  for (const auto& s : sectors)
    table.push_back({s.n_r, s.ell, solved.at(s.ell).binding[s.n_r]});
  return table;
}

std::vector<ConvergencePoint> convergence_scan(const MassConfig& masses,
                                               const PotentialSpec& spec, double beta, double mu,
                                               int ell, int d_max, int k) {
  if (k < 0) throw std::domain_error("convergence_scan: requires k >= 0");
  if (d_max < k + 1) throw std::domain_error("convergence_scan: requires d_max >= k + 1");
  const TrialBasis basis(ell, beta, mu, d_max);
  const OperatorMatrix h = hamiltonian_matrix(basis, masses, spec);

  std::vector<ConvergencePoint> scan;
  scan.reserve(d_max - k);
  for (int d = k + 1; d <= d_max; ++d) {
    const auto es = decompose(h.entries.topLeftCorner(d, d), false);
    scan.push_back({d, es.eigenvalues()[k]});
  }
  return scan;
}

namespace {

struct Objective {
  const MassConfig& masses;
  const PotentialSpec& spec;
  int ell, dim, k;
  OptimizationOutcome& outcome;

  double operator()(double mu, double beta) {
    const double value =
        solve(TrialBasis(ell, beta, mu, dim), masses, spec, k + 1).eigenvalues[k];
    ++outcome.evaluations;
    outcome.trace.push_back({mu, beta, value});
    if (value < outcome.best_value) {
      outcome.best_value = value;
      outcome.best_mu = mu;
      outcome.best_beta = beta;
    }
    return value;
  }
};

// Golden-section minimum of f on [a, b] to the given interval tolerance.
template <typename F>
void golden_section(F&& f, double a, double b, double tol) {
  constexpr double invphi = 0.61803398874989484820;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
}

}  // namespace

OptimizationOutcome optimize_parameters(const MassConfig& masses, const PotentialSpec& spec,
                                        int ell, int dim, int k, ParameterRange mu_range,
                                        ParameterRange beta_range) {
  if (!(mu_range.lo > 0.0) || !(mu_range.hi >= mu_range.lo))
    throw std::domain_error("optimize_parameters: requires 0 < mu_lo <= mu_hi");
  if (!(beta_range.lo > -0.5) || !(beta_range.hi >= beta_range.lo))
    throw std::domain_error("optimize_parameters: requires -1/2 < beta_lo <= beta_hi");
  if (spec.has_coulomb_singularity() && ell == 0 && !(beta_range.lo > 0.5))
    throw std::domain_error(
        "optimize_parameters: Coulomb-singular potentials with ell = 0 require beta > 1/2");
  if (k < 0 || k >= dim) throw std::domain_error("optimize_parameters: requires 0 <= k < dim");

  OptimizationOutcome outcome;
  outcome.best_value = std::numeric_limits<double>::infinity();
  outcome.evaluations = 0;

  Objective objective{masses, spec, ell, dim, k, outcome};

  double mu = std::sqrt(mu_range.lo * mu_range.hi);
  double beta = 0.5 * (beta_range.lo + beta_range.hi);
  objective(mu, beta);  // range midpoint; the reported optimum can only improve on it

  constexpr double tol = 1e-4;
  for (int sweep = 0; sweep < 2; ++sweep) {
    if (mu_range.hi > mu_range.lo) {
      golden_section([&](double lmu) { return objective(std::exp(lmu), beta); },
                     std::log(mu_range.lo), std::log(mu_range.hi), tol);
      mu = outcome.best_mu;
    }
    if (beta_range.hi > beta_range.lo) {
      golden_section([&](double bt) { return objective(mu, bt); }, beta_range.lo,
                     beta_range.hi, tol);
      beta = outcome.best_beta;
    }
  }
  return outcome;
}

}  // namespace salpeter
