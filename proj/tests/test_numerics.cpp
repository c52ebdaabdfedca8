#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "salpeter/numerics.hpp"

using namespace salpeter;

namespace {

// Explicit finite-sum definition; the production recurrence is checked
// against it.
double laguerre_sum(int k, double gamma, double x) {
  double sum = 0.0, sign = 1.0;
  for (int t = 0; t <= k; ++t) {
    const double binom = std::exp(std::lgamma(k + gamma + 1.0) - std::lgamma(k - t + 1.0) -
                                  std::lgamma(gamma + t + 1.0));
    sum += sign * binom * std::pow(x, t) / std::exp(std::lgamma(t + 1.0));
    sign = -sign;
  }
  return sum;
}

double rule_sum(const QuadratureRule& rule, auto&& f) {
  double s = 0.0;
  for (int i = 0; i < rule.order; ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("numerics");

TEST_CASE("laguerre_eval pinned values") {
  CHECK(laguerre_eval(0, 2.0, 7.3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(laguerre_eval(1, 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(laguerre_eval(2, 0.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK_THROWS_AS(laguerre_eval(2, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(laguerre_eval(2, 0.0, -0.5), std::domain_error);
  CHECK_THROWS_AS(laguerre_eval(-1, 0.0, 1.0), std::domain_error);
}

TEST_CASE("laguerre recurrence agrees with the explicit sum") {
  for (double gamma : {0.0, 0.5, 2.0, 3.7}) {
    for (int k = 0; k <= 12; ++k) {
      for (double x : {0.05, 0.8, 2.0, 7.5, 13.0, 20.0}) {
        const double ref = laguerre_sum(k, gamma, x);
        const double got = laguerre_eval(k, gamma, x);
        CHECK(got == doctest::Approx(ref).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("laguerre_eval_all matches single evaluations") {
  std::vector<double> all(9);
  laguerre_eval_all(8, 1.5, 3.2, all);
  for (int k = 0; k <= 8; ++k) CHECK(all[k] == doctest::Approx(laguerre_eval(k, 1.5, 3.2)).epsilon(1e-14));
}

TEST_CASE("log_gamma") {
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  // Gamma(3.5) = 15 sqrt(pi) / 8 from the recurrence on Gamma(1/2)
  CHECK(log_gamma(3.5) == doctest::Approx(1.2009736023470743).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("spherical_bessel pinned values") {
  CHECK(spherical_bessel(0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(spherical_bessel(1, 0.0) == doctest::Approx(0.0));
  CHECK(std::abs(spherical_bessel(0, std::numbers::pi)) < 1e-15);
  // j_2 by its closed form
  for (double x : {0.7, 5.0}) {
    const double ref = (3.0 / (x * x) - 1.0) * std::sin(x) / x - 3.0 * std::cos(x) / (x * x);
    CHECK(spherical_bessel(2, x) == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("spherical_bessel agrees with std::sph_bessel") {
  for (int ell = 0; ell <= 8; ++ell) {
    for (double x : {1e-3, 0.1, 0.4, 0.9, 2.0, 4.5, 9.0, 20.0, 55.0}) {
      const double ref = std::sph_bessel(static_cast<unsigned>(ell), x);
      CHECK(spherical_bessel(ell, x) == doctest::Approx(ref).epsilon(1e-11));
    }
  }
}

TEST_CASE("make_rule pinned small rules") {
  const QuadratureRule gl2 = make_rule(QuadKind::GaussLaguerre, 2, 0.0);
  CHECK(gl2.nodes[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(gl2.nodes[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
  CHECK(gl2.weights[0] == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-13));
  CHECK(gl2.weights[1] == doctest::Approx((2.0 - std::sqrt(2.0)) / 4.0).epsilon(1e-13));

  const QuadratureRule leg2 = make_rule(QuadKind::GaussLegendre, 2);
  CHECK(leg2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(leg2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(leg2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(leg2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

  const QuadratureRule gl1 = make_rule(QuadKind::GaussLaguerre, 1, 0.0);
  CHECK(gl1.nodes[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gl1.weights[0] == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(make_rule(QuadKind::GaussLaguerre, 0, 0.0), std::domain_error);
  CHECK_THROWS_AS(make_rule(QuadKind::GaussLaguerre, 4, -1.5), std::domain_error);
}

TEST_CASE("gauss-laguerre moment exactness") {
  for (double gamma : {0.0, 0.5, 2.0, 4.0}) {
    for (int n : {5, 20, 64}) {
      const QuadratureRule rule = make_rule(QuadKind::GaussLaguerre, n, gamma);
      for (size_t i = 1; i < rule.nodes.size(); ++i) {
        CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        CHECK(rule.weights[i] > 0.0);
      }
      const int jmax = std::min(2 * n - 1, 60);
      for (int j = 0; j <= jmax; ++j) {
        const double moment = rule_sum(rule, [j](double x) { return std::pow(x, j); });
        const double exact = std::exp(std::lgamma(gamma + j + 1.0));
        CHECK(moment == doctest::Approx(exact).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("laguerre orthogonality under the matching rule") {
  // int x^g e^-x L_i L_j dx = delta_ij Gamma(g+i+1)/i!
  for (double gamma : {0.0, 2.0, 4.0}) {
    const QuadratureRule rule = make_rule(QuadKind::GaussLaguerre, 40, gamma);
    std::vector<std::vector<double>> lag(rule.order, std::vector<double>(31));
    for (int q = 0; q < rule.order; ++q) laguerre_eval_all(30, gamma, rule.nodes[q], lag[q]);
    for (int i = 0; i <= 30; ++i) {
      for (int j = i; j <= 30; ++j) {
        double s = 0.0;
        for (int q = 0; q < rule.order; ++q) s += rule.weights[q] * lag[q][i] * lag[q][j];
        const double norm = std::exp(std::lgamma(gamma + i + 1.0) - std::lgamma(i + 1.0));
        if (i == j) CHECK(s == doctest::Approx(norm).epsilon(1e-10));
        else CHECK(std::abs(s) / norm < 1e-10);
      }
    }
  }
}

TEST_CASE("gauss-legendre polynomial exactness") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  const int n = 8;
  const QuadratureRule rule = make_rule(QuadKind::GaussLegendre, n);
  std::vector<double> c(2 * n);  // degree 2n-1
  for (double& v : c) v = coeff(rng);
  double exact = 0.0;
  for (size_t k = 0; k < c.size(); k += 2) exact += c[k] * 2.0 / (k + 1.0);  // odd moments vanish
  const double got = rule_sum(rule, [&](double x) {
    double p = 0.0;
    for (size_t k = c.size(); k-- > 0;) p = p * x + c[k];
    return p;
  });
  CHECK(std::abs(got - exact) < 1e-13);
}

TEST_CASE("mapped_legendre") {
  const QuadratureRule rule = mapped_legendre(6, 1.0, 3.0);
  CHECK(rule_sum(rule, [](double x) { return x * x; }) == doctest::Approx(26.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("momentum rule handles algebraic tails") {
  const MomentumRule rule = make_momentum_rule(80, 1.0);
  double a = 0.0, b = 0.0;
  for (size_t i = 0; i < rule.p.size(); ++i) {
    const double p = rule.p[i];
    a += rule.w[i] / (1.0 + p * p);
    b += rule.w[i] * p * p / std::pow(1.0 + p * p, 3);
  }
  CHECK(a == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
  CHECK(b == doctest::Approx(std::numbers::pi / 16.0).epsilon(1e-12));
}

TEST_SUITE_END();
