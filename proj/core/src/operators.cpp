#include "salpeter/operators.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "salpeter/numerics.hpp"

namespace salpeter {

namespace {

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error(what);
}

// sqrt(k! / Gamma(gamma + k + 1)) for k < d; N_k = (2 mu)^{(gamma+1)/2} * this.
Eigen::VectorXd laguerre_scales(const TrialBasis& basis) {
  const double g = basis.gamma();
  Eigen::VectorXd s(basis.dim);
  for (int k = 0; k < basis.dim; ++k)
    s[k] = std::exp(0.5 * (log_gamma(k + 1.0) - log_gamma(g + k + 1.0)));
  return s;
}

// Sum_q w_q f(x_q) v(x_q) v(x_q)^T with v_i(x) = S_i L_i^{(gamma)}(c x).
// The Gauss-Laguerre rule carries the full weight x^a e^{-x}, so only the
// polynomial factor f enters per node.
Eigen::MatrixXd weighted_laguerre_outer(const QuadratureRule& rule, const TrialBasis& basis,
                                        double arg_scale,
                                        const std::function<double(double)>& node_factor) {
  const int d = basis.dim;
  const Eigen::VectorXd scales = laguerre_scales(basis);
  Eigen::MatrixXd b(rule.order, d);
  Eigen::VectorXd w(rule.order);
  std::vector<double> lag(d);
  for (int i = 0; i < rule.order; ++i) {
    const double x = rule.nodes[i];
    laguerre_eval_all(d - 1, basis.gamma(), arg_scale * x, lag);
    for (int k = 0; k < d; ++k) b(i, k) = lag[k] * scales[k];
    w[i] = rule.weights[i] * (node_factor ? node_factor(x) : 1.0);
  }
  return b.transpose() * w.asDiagonal() * b;
}

void require_coulomb_regular(const TrialBasis& basis, const char* who) {
  if (!(2.0 * basis.ell + 2.0 * basis.beta - 1.0 > 0.0)) {
    std::ostringstream os;
    os << who << ": 1/r matrix elements require 2 ell + 2 beta - 1 > 0 "
       << "(beta > 1/2 when ell = 0); got ell = " << basis.ell << ", beta = " << basis.beta;
    domain_fail(os.str());
  }
}

// Matrix of <i| 1/r |j>.
Eigen::MatrixXd inverse_radius_matrix(const TrialBasis& basis, int extra_order) {
  const QuadratureRule rule =
      make_rule(QuadKind::GaussLaguerre, basis.dim + 2 + extra_order, basis.gamma() - 1.0);
  return 2.0 * basis.mu * weighted_laguerre_outer(rule, basis, 1.0, nullptr);
}

// Matrix of <i| e^{-b r} f(b r) / r |j> via the substitution
// x = (2 mu + b) r; f must be polynomial of degree <= extra_degree.
Eigen::MatrixXd screened_inverse_radius_matrix(const TrialBasis& basis, double b,
                                               int extra_degree,
                                               const std::function<double(double)>& f_of_br) {
  const double g = basis.gamma();
  const double s = 2.0 * basis.mu + b;
  const QuadratureRule rule =
      make_rule(QuadKind::GaussLaguerre, basis.dim + 2 + extra_degree, g - 1.0);
  const double front = std::exp((g + 1.0) * std::log(2.0 * basis.mu) - g * std::log(s));
  std::function<double(double)> node_factor;
  if (f_of_br) node_factor = [&](double x) { return f_of_br(b * x / s); };
  return front * weighted_laguerre_outer(rule, basis, 2.0 * basis.mu / s, node_factor);
}

// Matrix of <i| e^{-b r} f(b r) |j>.
Eigen::MatrixXd screened_matrix(const TrialBasis& basis, double b, int extra_degree,
                                const std::function<double(double)>& f_of_br) {
  const double g = basis.gamma();
  const double s = 2.0 * basis.mu + b;
  const QuadratureRule rule = make_rule(QuadKind::GaussLaguerre, basis.dim + 2 + extra_degree, g);
  const double front = std::exp((g + 1.0) * (std::log(2.0 * basis.mu) - std::log(s)));
  std::function<double(double)> node_factor;
  if (f_of_br) node_factor = [&](double x) { return f_of_br(b * x / s); };
  return front * weighted_laguerre_outer(rule, basis, 2.0 * basis.mu / s, node_factor);
}

}  // namespace

MassConfig::MassConfig(double m1_, double m2_) : m1(m1_), m2(m2_) {
  if (!(m1 >= 0.0) || !(m2 >= 0.0)) domain_fail("masses must be >= 0");
}

int kinetic_start_order() {
  const char* env = std::getenv("SALPETER_QUAD_ORDER");
  if (env == nullptr || *env == '\0') return 200;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 50)
    throw std::invalid_argument(
        "SALPETER_QUAD_ORDER must be an integer >= 50, got '" + std::string(env) + "'");
  return static_cast<int>(v);
}

namespace {

// One mapped-quadrature assembly at the given order (beta = 1 closed-form
// momentum functions, analytic in the mapped variable).
Eigen::MatrixXd momentum_matrix_pass(const TrialBasis& basis,
                                     const std::function<double(double)>& weight, int order) {
  const int d = basis.dim;
  const MomentumRule rule = make_momentum_rule(order, basis.mu);
  Eigen::MatrixXd phi(order, d);
  Eigen::VectorXd w(order);
  std::vector<double> buf(d);
  for (int i = 0; i < order; ++i) {
    const double p = rule.p[i];
    momentum_eval_all(basis, p, buf);
    for (int k = 0; k < d; ++k) phi(i, k) = buf[k];
    w[i] = rule.w[i] * p * p * weight(p);
  }
  return phi.transpose() * w.asDiagonal() * phi;
}

// Dyadic momentum blocks for beta != 1: [0, 8 mu], then doubling windows
// until a block stops contributing. Each momentum node costs a radial
// quadrature whose size grows with p, so far blocks get few nodes (the
// integrand is a smooth power law out there) and the ladder stops once a
// block falls below 1e-10 of the accumulated matrix.
Eigen::MatrixXd momentum_matrix_blocks(const TrialBasis& basis,
                                       const std::function<double(double)>& weight, int level,
                                       int base_nodes) {
  const int d = basis.dim;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d, d);
  std::vector<double> buf(d);
  double lo = 0.0, hi = 8.0 * basis.mu;
  for (int block = 0; block < 28; ++block) {
    const int nodes = (block < 2 ? base_nodes : std::max(12, base_nodes / 4)) << level;
    const QuadratureRule rule = mapped_legendre(nodes, lo, hi);
    Eigen::MatrixXd phi(nodes, d);
    Eigen::VectorXd w(nodes);
    for (int i = 0; i < nodes; ++i) {
      const double p = rule.nodes[i];
      detail::momentum_eval_quadrature_level(basis, p, level, buf);
      for (int k = 0; k < d; ++k) phi(i, k) = buf[k];
      w[i] = rule.weights[i] * p * p * weight(p);
    }
    const Eigen::MatrixXd contribution = phi.transpose() * w.asDiagonal() * phi;
    sum += contribution;
    const double tail = contribution.cwiseAbs().maxCoeff();
    if (block > 0 && tail < 1e-10 * std::max(1e-3, sum.cwiseAbs().maxCoeff())) return sum;
    lo = hi;
    hi *= 2.0;
  }
  throw NumericError("momentum_weight_matrix: dyadic block sum did not terminate");
}

}  // namespace

OperatorMatrix momentum_weight_matrix(const TrialBasis& basis,
                                      const std::function<double(double)>& weight) {
  OperatorMatrix result;
  if (basis.beta == 1.0) {
    int order = kinetic_start_order();
    Eigen::MatrixXd prev = momentum_matrix_pass(basis, weight, order);
    while (order <= 25600) {
      order *= 2;
      Eigen::MatrixXd cur = momentum_matrix_pass(basis, weight, order);
      const double change = (cur - prev).cwiseAbs().maxCoeff();
      if (change <= 1e-9 * std::max(1.0, cur.cwiseAbs().maxCoeff())) {
        result.entries = std::move(cur);
        result.symmetrize();
        return result;
      }
      prev = std::move(cur);
    }
    std::ostringstream os;
    os << "momentum quadrature did not converge by order " << order
       << " (ell = " << basis.ell << ", mu = " << basis.mu << ", dim = " << basis.dim << ")";
    throw NumericError(os.str());
  }

  const int base_nodes = std::max(24, kinetic_start_order() / 8);
  Eigen::MatrixXd prev = momentum_matrix_blocks(basis, weight, 0, base_nodes);
  for (int level = 1; level <= 2; ++level) {
    Eigen::MatrixXd cur = momentum_matrix_blocks(basis, weight, level, base_nodes);
    const double change = (cur - prev).cwiseAbs().maxCoeff();
    if (change <= 1e-9 * std::max(1.0, cur.cwiseAbs().maxCoeff())) {
      result.entries = std::move(cur);
      result.symmetrize();
      return result;
    }
    prev = std::move(cur);
  }
  std::ostringstream os;
  os << "momentum quadrature (general-beta path) did not converge "
     << "(ell = " << basis.ell << ", beta = " << basis.beta << ", dim = " << basis.dim << ")";
  throw NumericError(os.str());
}

OperatorMatrix kinetic_matrix(const TrialBasis& basis, const MassConfig& masses) {
  const double m1 = masses.m1, m2 = masses.m2;
  return momentum_weight_matrix(
      basis, [m1, m2](double p) { return std::hypot(p, m1) + std::hypot(p, m2); });
}

OperatorMatrix p_squared_matrix(const TrialBasis& basis) {
  const double g = basis.gamma();
  if (!(g - 2.0 > -1.0))
    domain_fail("p_squared_matrix: matrix elements diverge unless 2 ell + 2 beta > 1");
  const int d = basis.dim;
  const double s = basis.ell + basis.beta - 1.0;
  const QuadratureRule rule = make_rule(QuadKind::GaussLaguerre, d + 3, g - 2.0);
  const Eigen::VectorXd scales = laguerre_scales(basis);

  // r R_k'(r) = N_k e^{-x/2} (x/2mu)^s [ (s + k - x/2) L_k(x) - (k+g) L_{k-1}(x) ]
  Eigen::MatrixXd db(rule.order, d), b(rule.order, d);
  std::vector<double> lag(d);
  for (int i = 0; i < rule.order; ++i) {
    const double x = rule.nodes[i];
    laguerre_eval_all(d - 1, g, x, lag);
    for (int k = 0; k < d; ++k) {
      b(i, k) = lag[k] * scales[k];
      double v = (s + k - 0.5 * x) * lag[k];
      if (k > 0) v -= (k + g) * lag[k - 1];
      db(i, k) = v * scales[k];
    }
  }
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), rule.order);
  const double centrifugal = basis.ell * (basis.ell + 1.0);
  OperatorMatrix out;
  out.entries = 4.0 * basis.mu * basis.mu *
                (db.transpose() * w.asDiagonal() * db +
                 centrifugal * (b.transpose() * w.asDiagonal() * b));
  out.symmetrize();
  return out;
}

OperatorMatrix potential_matrix(const TrialBasis& basis, const PotentialSpec& spec) {
  OperatorMatrix out;
  if (spec.kind == PotentialKind::ExponentialWell) {
    out.entries = -spec.v0 * screened_matrix(basis, spec.b, 0, nullptr);
    out.symmetrize();
    return out;
  }
  if (spec.has_coulomb_singularity()) require_coulomb_regular(basis, "potential_matrix");
  out.entries = Eigen::MatrixXd::Zero(basis.dim, basis.dim);
  if (spec.kappa != 0.0) out.entries -= spec.kappa * inverse_radius_matrix(basis, 0);
  if (spec.upsilon != 0.0)
    out.entries -= spec.upsilon * screened_inverse_radius_matrix(basis, spec.b, 0, nullptr);
  out.symmetrize();
  return out;
}

OperatorMatrix radial_force_matrix(const TrialBasis& basis, const PotentialSpec& spec) {
  OperatorMatrix out;
  if (spec.kind == PotentialKind::ExponentialWell) {
    // r dV/dr = v0 (b r) e^{-b r}
    out.entries = spec.v0 * screened_matrix(basis, spec.b, 1, [](double br) { return br; });
    out.symmetrize();
    return out;
  }
  if (spec.has_coulomb_singularity()) require_coulomb_regular(basis, "radial_force_matrix");
  out.entries = Eigen::MatrixXd::Zero(basis.dim, basis.dim);
  if (spec.kappa != 0.0) out.entries += spec.kappa * inverse_radius_matrix(basis, 1);
  if (spec.upsilon != 0.0)
    out.entries += spec.upsilon * screened_inverse_radius_matrix(
                                      basis, spec.b, 1, [](double br) { return 1.0 + br; });
  out.symmetrize();
  return out;
}

OperatorMatrix hamiltonian_matrix(const TrialBasis& basis, const MassConfig& masses,
                                  const PotentialSpec& spec) {
  OperatorMatrix h = kinetic_matrix(basis, masses);
  h.entries += potential_matrix(basis, spec).entries;
  h.symmetrize();
  return h;
}

}  // namespace salpeter
