#pragma once

#include <Eigen/Dense>

#include <span>

#include "salpeter/operator_matrix.hpp"

namespace salpeter {

/// Finite radial trial space for one angular-momentum sector:
///
///   R_k(r) = N_k r^{ell+beta-1} e^{-mu r} L_k^{(2 ell + 2 beta)}(2 mu r),
///   k = 0 .. dim-1,
///
/// with N_k fixed by the orthonormality \int r^2 R_i R_j dr = delta_ij.
struct TrialBasis {
  int ell;      // orbital angular momentum, >= 0
  double beta;  // shape parameter, > -1/2
  double mu;    // inverse length scale, > 0
  int dim;      // trial-space dimension, >= 1

  TrialBasis(int ell, double beta, double mu, int dim);

  /// Laguerre weight exponent 2 ell + 2 beta of the sector.
  double gamma() const { return 2.0 * ell + 2.0 * beta; }
};

/// Expansion coefficients of a radial state in a TrialBasis; unit
/// Euclidean norm since the basis is orthonormal.
struct RadialState {
  TrialBasis basis;
  Eigen::VectorXd coefficients;
};

/// Normalized radial function R_k(r), 0 <= k < dim, r > 0.
double radial_eval(const TrialBasis& basis, int k, double r);

/// Momentum representation
///   phi_k(p) = sqrt(2/pi) \int_0^inf r^2 j_ell(p r) R_k(r) dr,
/// normalized so that \int p^2 phi_k^2 dp = 1. Exact closed form for
/// beta = 1 (Gegenbauer recurrence), two-stage quadrature otherwise.
double momentum_eval(const TrialBasis& basis, int k, double p);

/// All of phi_0(p) .. phi_{dim-1}(p) in one pass.
void momentum_eval_all(const TrialBasis& basis, double p, std::span<double> out);

/// Quadrature route to phi_k(p), independent of the closed form; this is
/// the production path for beta != 1 and the cross-check for beta = 1.
/// Two refinement levels must agree to 1e-8 or a NumericError is thrown.
double momentum_eval_by_quadrature(const TrialBasis& basis, int k, double p);

/// Matrix of \int r^2 R_i R_j dr by gamma-weighted Gauss-Laguerre
/// quadrature; identity up to roundoff by construction.
OperatorMatrix gram_matrix(const TrialBasis& basis);

namespace detail {
/// Orthonormality constants N_k for k < dim.
Eigen::VectorXd norm_constants(const TrialBasis& basis);
/// Single quadrature pass at the given refinement level, no agreement
/// check; level r doubles the node counts of level r-1.
void momentum_eval_quadrature_level(const TrialBasis& basis, double p, int level,
                                    std::span<double> out);
void momentum_eval_quadrature_all(const TrialBasis& basis, double p, std::span<double> out);
}  // namespace detail

}  // namespace salpeter
