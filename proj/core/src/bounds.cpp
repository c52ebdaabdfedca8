#include "salpeter/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "salpeter/numerics.hpp"

namespace salpeter {

namespace {

constexpr double kCountConstantMassive = 14.107590867;
constexpr double kCountConstantMassless = 6.074898097;

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error(what);
}

void check_coupling_nonnegative(double alpha, const char* who) {
  if (!(alpha >= 0.0)) {
    std::ostringstream os;
    os << who << ": requires alpha >= 0, got " << alpha;
    domain_fail(os.str());
  }
}

void check_mass(double m, const char* who) {
  if (!(m >= 0.0)) domain_fail(std::string(who) + ": requires m >= 0");
}

}  // namespace

double critical_coupling() { return 4.0 / std::numbers::pi; }

double herbst_bound(double alpha, double m) {
  check_coupling_nonnegative(alpha, "herbst_bound");
  check_mass(m, "herbst_bound");
  const double crit = critical_coupling();
  if (alpha > crit) {
    std::ostringstream os;
    os << "herbst_bound: coupling " << alpha << " exceeds the critical value 4/pi = " << crit
       << "; the operator is unbounded from below";
    domain_fail(os.str());
  }
  if (alpha == crit) return 0.0;  // bound vanishes exactly at critical coupling
  const double u = 0.25 * std::numbers::pi * alpha;
  return 2.0 * m * std::sqrt(std::max(0.0, 1.0 - u * u));
}

double improved_coulomb_bound(double alpha, double m) {
  check_coupling_nonnegative(alpha, "improved_coulomb_bound");
  check_mass(m, "improved_coulomb_bound");
  if (alpha > 1.0)
    domain_fail("improved_coulomb_bound: not applicable for alpha > 1");
  return 2.0 * m * std::sqrt(0.5 * (1.0 + std::sqrt(1.0 - alpha * alpha)));
}

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::Herbst: return "herbst";
    case BoundMethod::ImprovedCoulomb: return "improved-coulomb";
    case BoundMethod::PotentialMinimum: return "potential-minimum";
    case BoundMethod::BestOf: return "best-of";
  }
  return "?";
}

std::string to_string(BoundsMode mode) {
  return mode == BoundsMode::Paper ? "paper" : "best";
}

BoundsReport hellmann_lower_bound(const PotentialSpec& spec, double m, BoundsMode mode) {
  if (!spec.is_hellmann())
    throw std::invalid_argument("hellmann_lower_bound: requires a hellmann spec");
  check_mass(m, "hellmann_lower_bound");

  BoundsReport report;
  report.mode = mode;
  report.alpha_eff = spec.kappa + std::max(spec.upsilon, 0.0);
  const bool has_minimum = spec.kappa + spec.upsilon <= 0.0;

  if (mode == BoundsMode::Paper) {
    if (has_minimum) {
      report.bounded_below = true;
      report.method = BoundMethod::PotentialMinimum;
      report.lower_bound = 2.0 * m + minimum(spec).v_min;
    } else if (report.alpha_eff <= 1.0) {
      report.bounded_below = true;
      report.method = BoundMethod::ImprovedCoulomb;
      report.lower_bound = improved_coulomb_bound(report.alpha_eff, m);
    } else if (report.alpha_eff <= critical_coupling()) {
      report.bounded_below = true;
      report.method = BoundMethod::Herbst;
      report.lower_bound = herbst_bound(report.alpha_eff, m);
    }
    return report;
  }

  double best = -std::numeric_limits<double>::infinity();
  BoundMethod best_method = BoundMethod::BestOf;
  if (has_minimum) {
    best = 2.0 * m + minimum(spec).v_min;
    best_method = BoundMethod::PotentialMinimum;
  }
  if (report.alpha_eff <= 1.0) {
    const double v = improved_coulomb_bound(report.alpha_eff, m);
    if (v > best) {
      best = v;
      best_method = BoundMethod::ImprovedCoulomb;
    }
  } else if (report.alpha_eff <= critical_coupling()) {
    const double v = herbst_bound(report.alpha_eff, m);
    if (v > best) {
      best = v;
      best_method = BoundMethod::Herbst;
    }
  }
  if (std::isfinite(best)) {
    report.bounded_below = true;
    report.method = best_method;
    report.lower_bound = best;
  }
  return report;
}

CountReport check_condition_L(const PotentialSpec& spec, double m) {
  check_mass(m, "check_condition_L");
  CountReport report;
  report.c_used = m > 0.0 ? kCountConstantMassive : kCountConstantMassless;

  if (spec.kind == PotentialKind::ExponentialWell) {
    report.condition_ok = true;  // V <= 0, exponential decay: both norms finite
    return report;
  }

  const double k = spec.kappa, u = spec.upsilon;
  if (k == 0.0 && u == 0.0) {
    report.condition_ok = true;  // V identically zero
    return report;
  }

  std::vector<std::string> reasons;
  if (u < -k) {
    reasons.push_back(k == 0.0 ? "V >= 0 (condition V <= 0 violated)"
                               : "V >= 0 near the origin (condition V <= 0 violated)");
  }
  if (k + u > 0.0) reasons.push_back("1/r singularity violates L^3 at origin");
  if (k > 0.0) reasons.push_back("Coulomb tail at infinity");

  if (reasons.empty()) {
    report.condition_ok = true;
    return report;
  }
  std::string joined = reasons.front();
  for (size_t i = 1; i < reasons.size(); ++i) joined += "; " + reasons[i];
  report.failure_reason = joined;
  return report;
}

namespace {

// Integrand r^2 [|V|(|V| + 4m)]^{3/2} of the counting bound.
double count_integrand(const PotentialSpec& spec, double m, double r) {
  const double av = std::abs(evaluate(spec, r));
  return r * r * std::pow(av * (av + 4.0 * m), 1.5);
}

// Adaptive Gauss(7)-Kronrod(15) on [a, b].
struct GaussKronrod {
  static constexpr double xgk[8] = {
      0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
      0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
  static constexpr double wgk[8] = {
      0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
      0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
  static constexpr double wg[4] = {
      0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

  template <typename F>
  static void apply(F&& f, double a, double b, double& kronrod, double& err) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double resg = 0.0, resk = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double dx = half * xgk[i];
      const double fsum = (i < 7) ? f(mid - dx) + f(mid + dx) : f(mid);
      resk += wgk[i] * fsum;
      if (i % 2 == 1) resg += wg[i / 2] * fsum;
    }
    kronrod = resk * half;
    err = std::abs(resk - resg) * half;
  }
};

template <typename F>
double adaptive_quadrature(F&& f, double a, double b, double rel_tol) {
  struct Segment {
    double a, b, value, err;
  };
  std::vector<Segment> segments;
  double v, e;
  GaussKronrod::apply(f, a, b, v, e);
  segments.push_back({a, b, v, e});
  for (int iter = 0; iter < 2000; ++iter) {
    double total = 0.0, err = 0.0;
    size_t worst = 0;
    for (size_t i = 0; i < segments.size(); ++i) {
      total += segments[i].value;
      err += segments[i].err;
      if (segments[i].err > segments[worst].err) worst = i;
    }
    if (err <= rel_tol * std::max(std::abs(total), 1e-300)) return total;
    const Segment seg = segments[worst];
    const double mid = 0.5 * (seg.a + seg.b);
    Segment left{seg.a, mid, 0, 0}, right{mid, seg.b, 0, 0};
    GaussKronrod::apply(f, left.a, left.b, left.value, left.err);
    GaussKronrod::apply(f, right.a, right.b, right.value, right.err);
    segments[worst] = left;
    segments.push_back(right);
  }
  throw NumericError("count_bound: adaptive quadrature did not reach the relative tolerance");
}

}  // namespace

CountReport count_bound(const PotentialSpec& spec, double m) {
  CountReport report = check_condition_L(spec, m);
  if (!report.condition_ok) return report;

  if (spec.is_hellmann() && spec.kappa == 0.0 && spec.upsilon == 0.0) {
    report.n_bound = 0.0;  // V identically zero
    return report;
  }

  // Upper integration limit: march out to where the integrand falls below
  // 1e-16 of its peak, capped at 1e3 / b.
  const double cap = 1e3 / spec.b;
  double peak = 0.0;
  for (double r = 1e-3 / spec.b; r < cap; r *= 1.3)
    peak = std::max(peak, count_integrand(spec, m, r));
  double r_end = cap;
  for (double r = 1.0 / spec.b; r < cap; r *= 1.1) {
    if (count_integrand(spec, m, r) < 1e-16 * peak) {
      r_end = r;
      break;
    }
  }

  const double integral = adaptive_quadrature(
      [&](double r) { return r > 0.0 ? count_integrand(spec, m, r) : 0.0; }, 0.0, r_end, 1e-8);
  report.n_bound = report.c_used / (12.0 * std::numbers::pi) * integral;
  return report;
}

}  // namespace salpeter
