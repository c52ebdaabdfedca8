#pragma once

#include <functional>

#include "salpeter/basis.hpp"
#include "salpeter/operator_matrix.hpp"
#include "salpeter/potentials.hpp"

namespace salpeter {

/// Constituent masses, natural units.
struct MassConfig {
  double m1;
  double m2;

  explicit MassConfig(double m) : MassConfig(m, m) {}
  MassConfig(double m1_, double m2_);

  double total() const { return m1 + m2; }
  bool equal() const { return m1 == m2; }
};

/// Starting order for the mapped momentum quadrature; 200 unless the
/// environment variable SALPETER_QUAD_ORDER (integer >= 50) overrides it.
int kinetic_start_order();

/// Matrix of \int_0^inf dp p^2 phi_i(p) phi_j(p) weight(p) with the
/// quadrature order doubled until the max-norm change drops below 1e-9.
OperatorMatrix momentum_weight_matrix(const TrialBasis& basis,
                                      const std::function<double(double)>& weight);

/// Kinetic matrix T_ij = <i| sqrt(p^2+m1^2) + sqrt(p^2+m2^2) |j>.
OperatorMatrix kinetic_matrix(const TrialBasis& basis, const MassConfig& masses);

/// <i| p^2 |j>, assembled in position representation (exact quadrature
/// for every beta). Requires 2 ell + 2 beta > 1.
OperatorMatrix p_squared_matrix(const TrialBasis& basis);

/// <i| V |j>; exponential-weighted polynomial integrals, exact Gauss-
/// Laguerre. The 1/r pieces require 2 ell + 2 beta - 1 > 0 (beta > 1/2
/// when ell = 0) or a domain error is raised.
OperatorMatrix potential_matrix(const TrialBasis& basis, const PotentialSpec& spec);

/// <i| r dV/dr |j>, same machinery as potential_matrix; the virial
/// right-hand side is a quadratic form in this matrix.
OperatorMatrix radial_force_matrix(const TrialBasis& basis, const PotentialSpec& spec);

OperatorMatrix hamiltonian_matrix(const TrialBasis& basis, const MassConfig& masses,
                                  const PotentialSpec& spec);

}  // namespace salpeter
