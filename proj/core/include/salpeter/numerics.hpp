#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace salpeter {

/// Thrown when an iterative numerical procedure fails to reach its
/// accuracy target (quadrature order-doubling, eigensolver failure, ...).
/// The message carries the diagnostics of the failed run.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class QuadKind { GaussLaguerre, GaussLegendre };

/// Nodes and positive weights of a Gaussian rule.
///
/// GaussLaguerre integrates f against the weight x^gamma e^{-x} on
/// (0, inf); GaussLegendre integrates on [-1, 1]. A rule of order n is
/// exact for polynomial f of degree <= 2n-1.
struct QuadratureRule {
  QuadKind kind;
  int order;
  double gamma;  // weight exponent, Gauss-Laguerre only
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Generalized Laguerre polynomial L_k^{(gamma)}(x) by the stable
/// three-term recurrence. Requires gamma > -1.
double laguerre_eval(int k, double gamma, double x);

/// Fills out[0..kmax] with L_0^{(gamma)}(x) .. L_kmax^{(gamma)}(x)
/// in one recurrence pass.
void laguerre_eval_all(int kmax, double gamma, double x, std::span<double> out);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Spherical Bessel function j_ell(x), x >= 0. Series expansion near the
/// origin, downward (Miller) recurrence where the upward one is unstable.
double spherical_bessel(int ell, double x);

QuadratureRule make_rule(QuadKind kind, int order, double gamma = 0.0);

/// Gauss-Legendre rule mapped to the interval [a, b].
QuadratureRule mapped_legendre(int order, double a, double b);

/// Rule for integrals over momenta p in (0, inf) with algebraically
/// decaying integrands: p = scale * tan(pi t / 2) with Gauss-Legendre
/// nodes t in (0, 1). Weights already contain the Jacobian dp/dt.
struct MomentumRule {
  std::vector<double> p;
  std::vector<double> w;
};
MomentumRule make_momentum_rule(int order, double scale);

}  // namespace salpeter
