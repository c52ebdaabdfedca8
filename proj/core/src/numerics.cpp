#include "salpeter/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace salpeter {

namespace {

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error(what);
}

std::string fmt_arg(const char* name, double v) {
  std::ostringstream os;
  os << name << " = " << v;
  return os.str();
}

}  // namespace

double laguerre_eval(int k, double gamma, double x) {
  if (k < 0) domain_fail("laguerre_eval: k must be >= 0");
  if (!(gamma > -1.0)) domain_fail("laguerre_eval: requires gamma > -1, got " + fmt_arg("gamma", gamma));
  if (!(x >= 0.0)) domain_fail("laguerre_eval: requires x >= 0, got " + fmt_arg("x", x));
  double lm1 = 0.0;           // L_{j-1}
  double l = 1.0;             // L_j, starting at L_0 = 1
  for (int j = 0; j < k; ++j) {
    const double lp1 = ((2.0 * j + gamma + 1.0 - x) * l - (j + gamma) * lm1) / (j + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

void laguerre_eval_all(int kmax, double gamma, double x, std::span<double> out) {
  if (kmax < 0) domain_fail("laguerre_eval_all: kmax must be >= 0");
  if (!(gamma > -1.0)) domain_fail("laguerre_eval_all: requires gamma > -1");
  if (out.size() < static_cast<size_t>(kmax) + 1) domain_fail("laguerre_eval_all: output span too small");
  out[0] = 1.0;
  if (kmax == 0) return;
  out[1] = 1.0 + gamma - x;
  for (int j = 1; j < kmax; ++j) {
    out[j + 1] = ((2.0 * j + gamma + 1.0 - x) * out[j] - (j + gamma) * out[j - 1]) / (j + 1.0);
  }
}

double log_gamma(double x) {
  if (!(x > 0.0)) domain_fail("log_gamma: requires x > 0, got " + fmt_arg("x", x));
  return std::lgamma(x);
}

namespace {

// Taylor series about x = 0; converges fast for x < 1.
double sbessel_series(int ell, double x) {
  double dfact = 1.0;  // (2 ell + 1)!!
  for (int j = 1; j <= ell; ++j) dfact *= 2.0 * j + 1.0;
  double xl = 1.0;
  for (int j = 0; j < ell; ++j) xl *= x;
  const double x2h = 0.5 * x * x;
  double term = 1.0, sum = 1.0;
  for (int j = 1; j <= 40; ++j) {
    term *= -x2h / (j * (2.0 * (ell + j) + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return xl / dfact * sum;
}

double sbessel_upward(int ell, double x) {
  double jm1 = std::sin(x) / x;
  if (ell == 0) return jm1;
  double j = jm1 / x - std::cos(x) / x;
  for (int n = 1; n < ell; ++n) {
    const double jp1 = (2.0 * n + 1.0) / x * j - jm1;
    jm1 = j;
    j = jp1;
  }
  return j;
}

// Miller's algorithm: downward recurrence from a start order well above
// ell, normalized against the directly computed j_0.
double sbessel_downward(int ell, double x) {
  const int start = ell + 16 + static_cast<int>(std::ceil(std::sqrt(40.0 * ell)));
  double jp1 = 0.0;
  double j = 1e-30;
  double target = 0.0;
  for (int n = start; n >= 1; --n) {
    const double jm1 = (2.0 * n + 1.0) / x * j - jp1;
    jp1 = j;
    j = jm1;
    if (n - 1 == ell) target = j;
    // rescale to avoid overflow
    if (std::abs(j) > 1e280) {
      j *= 1e-280;
      jp1 *= 1e-280;
      target *= 1e-280;
    }
  }
  return target * (std::sin(x) / x) / j;
}

}  // namespace

double spherical_bessel(int ell, double x) {
  if (ell < 0) domain_fail("spherical_bessel: requires ell >= 0");
  if (!(x >= 0.0)) domain_fail("spherical_bessel: requires x >= 0, got " + fmt_arg("x", x));
  if (x < 0.5) return sbessel_series(ell, x);
  if (x >= ell) return sbessel_upward(ell, x);
  return sbessel_downward(ell, x);
}

namespace {

// Exponentially damped orthonormal Laguerre recurrence: fills
// q[k] = e^{-x/2} p_k(x) for k <= n, where p_k are orthonormal with
// respect to x^gamma e^{-x}. Values stay representable for every node
// of the rules used here, unlike the bare polynomials.
void damped_orthonormal_laguerre(int n, double gamma, double x, std::vector<double>& q) {
  q.resize(n + 1);
  q[0] = std::exp(-0.5 * x - 0.5 * std::lgamma(gamma + 1.0));
  if (n == 0) return;
  q[1] = (x - (gamma + 1.0)) * q[0] / std::sqrt(gamma + 1.0);
  for (int k = 1; k < n; ++k) {
    const double bk = std::sqrt(k * (k + gamma));
    const double bk1 = std::sqrt((k + 1.0) * (k + 1.0 + gamma));
    q[k + 1] = ((x - (2.0 * k + gamma + 1.0)) * q[k] - bk * q[k - 1]) / bk1;
  }
}

// Golub-Welsch nodes from the symmetric tridiagonal Jacobi matrix
// (robust for non-integer gamma), Newton-polished on the damped
// recurrence. Weights via w_i = 1 / sum_k p_k(x_i)^2; the eigenvector
// route loses the e^{-x}-small tail weights to absolute roundoff.
QuadratureRule laguerre_rule(int n, double gamma) {
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + gamma + 1.0;
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(i * (i + gamma));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("laguerre_rule: tridiagonal eigensolver failed");

  QuadratureRule rule{QuadKind::GaussLaguerre, n, gamma, {}, {}};
  rule.nodes.resize(n);
  rule.weights.resize(n);
  std::vector<double> q;
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i];
    for (int it = 0; it < 4; ++it) {  // nodes are the roots of p_n
      damped_orthonormal_laguerre(n, gamma, x, q);
      const double deriv = (n * q[n] - std::sqrt(n * (n + gamma)) * q[n - 1]) / x;
      const double dx = q[n] / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-14 * std::max(x, 1.0)) break;
    }
    damped_orthonormal_laguerre(n, gamma, x, q);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += q[k] * q[k];
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(-x) / sum;
  }
  return rule;
}

// Newton iteration on the Legendre recurrence; cheaper than an
// eigendecomposition at the large orders used for momentum integrals.
QuadratureRule legendre_rule(int n) {
  QuadratureRule rule{QuadKind::GaussLegendre, n, 0.0, {}, {}};
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

void check_rule(const QuadratureRule& rule) {
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    if (rule.weights[i] <= 0.0) throw NumericError("make_rule: non-positive weight produced");
    if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))
      throw NumericError("make_rule: nodes not strictly increasing");
  }
}

}  // namespace

QuadratureRule make_rule(QuadKind kind, int order, double gamma) {
  if (order < 1) domain_fail("make_rule: requires order >= 1");
  QuadratureRule rule;
  switch (kind) {
    case QuadKind::GaussLaguerre:
      if (!(gamma > -1.0)) domain_fail("make_rule: gauss-laguerre requires gamma > -1");
      rule = laguerre_rule(order, gamma);
      break;
    case QuadKind::GaussLegendre:
      rule = legendre_rule(order);
      break;
    default:
      domain_fail("make_rule: unsupported rule kind");
  }
  check_rule(rule);
  return rule;
}

QuadratureRule mapped_legendre(int order, double a, double b) {
  if (!(b > a)) domain_fail("mapped_legendre: requires b > a");
  QuadratureRule rule = make_rule(QuadKind::GaussLegendre, order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

MomentumRule make_momentum_rule(int order, double scale) {
  if (order < 1) domain_fail("make_momentum_rule: requires order >= 1");
  if (!(scale > 0.0)) domain_fail("make_momentum_rule: requires scale > 0");
  const QuadratureRule base = make_rule(QuadKind::GaussLegendre, order);
  MomentumRule rule;
  rule.p.resize(order);
  rule.w.resize(order);
  const double half_pi = 0.5 * std::numbers::pi;
  for (int i = 0; i < order; ++i) {
    const double t = 0.5 * (base.nodes[i] + 1.0);  // map [-1,1] -> (0,1)
    const double tn = std::tan(half_pi * t);
    rule.p[i] = scale * tn;
    rule.w[i] = 0.5 * base.weights[i] * scale * half_pi * (1.0 + tn * tn);
  }
  return rule;
}

}  // namespace salpeter
