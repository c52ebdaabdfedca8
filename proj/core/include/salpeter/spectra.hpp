#pragma once

#include <array>
#include <span>
#include <vector>

#include "salpeter/operators.hpp"

namespace salpeter {

/// Rayleigh-Ritz output for one angular-momentum sector. The ordered
/// Ritz values bound the true eigenvalues below the essential spectrum
/// from above, E_k <= eigenvalues[k].
struct SpectralResult {
  TrialBasis basis;
  MassConfig masses;
  PotentialSpec spec;
  Eigen::VectorXd eigenvalues;  // ascending, n_states entries
  Eigen::MatrixXd states;       // dim x n_states orthonormal coefficient columns
  Eigen::VectorXd binding;      // eigenvalues - (m1 + m2)

  RadialState state(int k) const { return {basis, states.col(k)}; }
};

/// Dense symmetric eigendecomposition of the Hamiltonian in the trial
/// basis. Residuals ||H v - E v|| are verified below 1e-9 ||H||.
SpectralResult solve(const TrialBasis& basis, const MassConfig& masses,
                     const PotentialSpec& spec, int n_states);

struct SectorLevel {
  int n_r;  // radial excitation: ascending eigenvalue index within the sector
  int ell;
};

struct BindingEntry {
  int n_r;
  int ell;
  double binding;
};

/// One solve per distinct ell; entry (n_r, ell) is the n_r-th ascending
/// eigenvalue of that sector minus the mass threshold.
std::vector<BindingEntry> binding_table(const MassConfig& masses, const PotentialSpec& spec,
                                        double beta, double mu, int dim,
                                        std::span<const SectorLevel> sectors);

struct ConvergencePoint {
  int dim;
  double eigenvalue;
};

/// E_k(d) for d = k+1 .. d_max in nested trial spaces (leading principal
/// submatrices of one assembly); non-increasing by the min-max theorem.
std::vector<ConvergencePoint> convergence_scan(const MassConfig& masses,
                                               const PotentialSpec& spec, double beta, double mu,
                                               int ell, int d_max, int k);

struct ParameterRange {
  double lo;
  double hi;
};

struct OptimizationOutcome {
  double best_mu;
  double best_beta;
  double best_value;  // E_k at the optimum (absolute energy)
  long evaluations;
  std::vector<std::array<double, 3>> trace;  // (mu, beta, E_k)
};

/// Derivative-free minimization of E_k over (mu, beta): coordinate-wise
/// golden-section over log mu and beta, two sweeps, parameter tolerance
/// 1e-4. A degenerate range (lo == hi) pins that coordinate.
OptimizationOutcome optimize_parameters(const MassConfig& masses, const PotentialSpec& spec,
                                        int ell, int dim, int k, ParameterRange mu_range,
                                        ParameterRange beta_range);

}  // namespace salpeter
