#include "salpeter/basis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "salpeter/numerics.hpp"

namespace salpeter {

namespace {

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error(what);
}

void check_index(const TrialBasis& basis, int k) {
  if (k < 0 || k >= basis.dim) {
    std::ostringstream os;
    os << "basis index k = " << k << " outside trial space of dimension " << basis.dim;
    domain_fail(os.str());
  }
}

constexpr double kSqrtTwoOverPi = 0.79788456080286535588;

}  // namespace

TrialBasis::TrialBasis(int ell_, double beta_, double mu_, int dim_)
    : ell(ell_), beta(beta_), mu(mu_), dim(dim_) {
  if (ell < 0) domain_fail("trial basis requires ell >= 0");
  if (!(beta > -0.5)) domain_fail("trial basis requires beta > -1/2");
  if (!(mu > 0.0)) domain_fail("trial basis requires mu > 0");
  if (dim < 1) domain_fail("trial basis requires dim >= 1");
  if (!(gamma() > -1.0)) domain_fail("trial basis requires 2 ell + 2 beta > -1");
}

namespace detail {

Eigen::VectorXd norm_constants(const TrialBasis& basis) {
  const double g = basis.gamma();
  Eigen::VectorXd n(basis.dim);
  const double lg2mu = (g + 1.0) * std::log(2.0 * basis.mu);
  for (int k = 0; k < basis.dim; ++k)
    n[k] = std::exp(0.5 * (lg2mu + log_gamma(k + 1.0) - log_gamma(g + k + 1.0)));
  return n;
}

}  // namespace detail

double radial_eval(const TrialBasis& basis, int k, double r) {
  check_index(basis, k);
  if (!(r > 0.0)) domain_fail("radial_eval: requires r > 0");
  const double g = basis.gamma();
  const double nk = std::exp(0.5 * ((g + 1.0) * std::log(2.0 * basis.mu) +
                                    log_gamma(k + 1.0) - log_gamma(g + k + 1.0)));
  return nk * std::pow(r, basis.ell + basis.beta - 1.0) * std::exp(-basis.mu * r) *
         laguerre_eval(k, g, 2.0 * basis.mu * r);
}

namespace {

// beta = 1 closed form. The generating function of L_k^{(2l+2)} turns the
// transform into a Gegenbauer expansion:
//   phi_k(p) = sqrt(2/pi) N_k 2 (l+1)! mu (2p)^l / (mu^2+p^2)^{l+2}
//              * [C_k^{(l+2)}(x) + C_{k-1}^{(l+2)}(x)],
//   x = (p^2 - mu^2) / (p^2 + mu^2).
void momentum_closed_form_all(const TrialBasis& basis, double p, std::span<double> out) {
  const int l = basis.ell;
  const double mu = basis.mu;
  const double a = mu * mu + p * p;
  const double x = (p * p - mu * mu) / a;
  const double lambda = l + 2.0;
  const double front = kSqrtTwoOverPi * 2.0 * std::exp(log_gamma(l + 2.0)) * mu *
                       std::pow(2.0 * p, l) / std::pow(a, l + 2.0);
  const Eigen::VectorXd nk = detail::norm_constants(basis);
  double cm1 = 0.0;  // C_{k-1}
  double c = 1.0;    // C_k, starting at C_0 = 1
  for (int k = 0; k < basis.dim; ++k) {
    out[k] = front * nk[k] * (c + cm1);
    const double cp1 = (2.0 * (k + lambda) * x * c - (k + 2.0 * lambda - 1.0) * cm1) / (k + 1.0);
    cm1 = c;
    c = cp1;
  }
}

struct QuadratureContext {
  double a;      // radial power ell + beta + 1 in y = mu r
  double g;      // Laguerre superscript 2 ell + 2 beta
  double q;      // p / mu
  int ell;
  int dim;
};

// One evaluation of J_k(q) = int y^a e^-y L_k(2y) j_ell(q y) dy for all k,
// at the given refinement level. Wavelength-matched Gauss-Legendre
// panels resolve both the Bessel and the Laguerre oscillations, with
// geometric refinement toward y = 0 for the fractional power y^a.
void transform_integrals(const QuadratureContext& ctx, int level, std::span<double> out) {
  const int d = ctx.dim;
  std::vector<double> lag(d);
  for (int k = 0; k < d; ++k) out[k] = 0.0;

  const double y_max = 2.0 * d + ctx.g + 30.0;
  const double q_eff = std::max({ctx.q, std::sqrt(2.0 * d), 1.0});
  const double width = std::min(0.25 * y_max, 6.0 / q_eff);
  const int nodes_per_panel = 12 << level;
  const QuadratureRule base = make_rule(QuadKind::GaussLegendre, nodes_per_panel);

  std::vector<double> edges;
  const double y0 = std::min(1.0, 0.25 * y_max);
  edges.push_back(0.0);
  for (int j = 36; j >= 0; --j) edges.push_back(y0 * std::ldexp(1.0, -j));
  for (double y = y0 + width; y < y_max; y += width) edges.push_back(y);
  edges.push_back(y_max);

  for (size_t e = 0; e + 1 < edges.size(); ++e) {
    const double mid = 0.5 * (edges[e] + edges[e + 1]);
    const double half = 0.5 * (edges[e + 1] - edges[e]);
    for (int i = 0; i < nodes_per_panel; ++i) {
      const double y = mid + half * base.nodes[i];
      if (y <= 0.0) continue;
      const double w = half * base.weights[i] * std::pow(y, ctx.a) * std::exp(-y) *
                       spherical_bessel(ctx.ell, ctx.q * y);
      laguerre_eval_all(d - 1, ctx.g, 2.0 * y, lag);
      for (int k = 0; k < d; ++k) out[k] += w * lag[k];
    }
  }
}

}  // namespace

namespace detail {

void momentum_eval_quadrature_level(const TrialBasis& basis, double p, int level,
                                    std::span<double> out) {
  const int d = basis.dim;
  const QuadratureContext ctx{basis.ell + basis.beta + 1.0, basis.gamma(), p / basis.mu,
                              basis.ell, d};
  transform_integrals(ctx, level, out);
  const Eigen::VectorXd nk = norm_constants(basis);
  const double front = kSqrtTwoOverPi * std::pow(basis.mu, -(basis.ell + basis.beta + 2.0));
  for (int k = 0; k < d; ++k) out[k] *= front * nk[k];
}

void momentum_eval_quadrature_all(const TrialBasis& basis, double p, std::span<double> out) {
  const int d = basis.dim;
  std::vector<double> coarse(d);
  momentum_eval_quadrature_level(basis, p, 0, coarse);
  momentum_eval_quadrature_level(basis, p, 1, out);
  double scale = 1e-3;
  for (int k = 0; k < d; ++k) scale = std::max(scale, std::abs(out[k]));
  for (int k = 0; k < d; ++k) {
    if (std::abs(out[k] - coarse[k]) > 1e-8 * scale) {
      std::ostringstream os;
      os << "momentum transform quadrature did not converge at p = " << p << ", k = " << k
         << " (refinement change " << std::abs(out[k] - coarse[k]) << ", scale " << scale << ")";
      throw NumericError(os.str());
    }
  }
}

}  // namespace detail

void momentum_eval_all(const TrialBasis& basis, double p, std::span<double> out) {
  if (!(p >= 0.0)) domain_fail("momentum_eval: requires p >= 0");
  if (out.size() < static_cast<size_t>(basis.dim)) domain_fail("momentum_eval_all: output span too small");
  if (basis.beta == 1.0) {
    momentum_closed_form_all(basis, p, out);
    return;
  }
  detail::momentum_eval_quadrature_all(basis, p, out);
}

double momentum_eval(const TrialBasis& basis, int k, double p) {
  check_index(basis, k);
  std::vector<double> all(basis.dim);
  momentum_eval_all(basis, p, all);
  return all[k];
}

double momentum_eval_by_quadrature(const TrialBasis& basis, int k, double p) {
  check_index(basis, k);
  if (!(p >= 0.0)) domain_fail("momentum_eval_by_quadrature: requires p >= 0");
  std::vector<double> all(basis.dim);
  detail::momentum_eval_quadrature_all(basis, p, all);
  return all[k];
}

OperatorMatrix gram_matrix(const TrialBasis& basis) {
  const int d = basis.dim;
  const double g = basis.gamma();
  const QuadratureRule rule = make_rule(QuadKind::GaussLaguerre, d + 2, g);

  Eigen::VectorXd scale(d);
  for (int k = 0; k < d; ++k)
    scale[k] = std::exp(0.5 * (log_gamma(k + 1.0) - log_gamma(g + k + 1.0)));

  Eigen::MatrixXd b(rule.order, d);
  std::vector<double> lag(d);
  for (int i = 0; i < rule.order; ++i) {
    laguerre_eval_all(d - 1, g, rule.nodes[i], lag);
    for (int k = 0; k < d; ++k) b(i, k) = lag[k] * scale[k];
  }
  OperatorMatrix gram;
  gram.entries = b.transpose() * Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), rule.order).asDiagonal() * b;
  gram.symmetrize();
  return gram;
}

}  // namespace salpeter
