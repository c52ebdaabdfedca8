#include "salpeter/potentials.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace salpeter {

namespace {

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error(what);
}

void check_radius(double r) {
  if (!(r > 0.0)) {
    std::ostringstream os;
    os << "potential evaluation requires r > 0, got r = " << r;
    domain_fail(os.str());
  }
}

}  // namespace

PotentialSpec PotentialSpec::hellmann(double kappa, double upsilon, double b) {
  if (!(kappa >= 0.0)) domain_fail("hellmann potential requires kappa >= 0");
  if (!(b > 0.0)) domain_fail("hellmann potential requires b > 0");
  return PotentialSpec{PotentialKind::Hellmann, kappa, upsilon, b, 0.0};
}

PotentialSpec PotentialSpec::exponential_well(double v0, double b) {
  if (!(v0 > 0.0)) domain_fail("exponential well requires v0 > 0");
  if (!(b > 0.0)) domain_fail("exponential well requires b > 0");
  return PotentialSpec{PotentialKind::ExponentialWell, 0.0, 0.0, b, v0};
}

double evaluate(const PotentialSpec& spec, double r) {
  check_radius(r);
  if (spec.kind == PotentialKind::ExponentialWell) return -spec.v0 * std::exp(-spec.b * r);
  return -(spec.kappa + spec.upsilon * std::exp(-spec.b * r)) / r;
}

double radial_force(const PotentialSpec& spec, double r) {
  check_radius(r);
  if (spec.kind == PotentialKind::ExponentialWell)
    return spec.v0 * spec.b * r * std::exp(-spec.b * r);
  return (spec.kappa + spec.upsilon * std::exp(-spec.b * r) * (1.0 + spec.b * r)) / r;
}

std::string to_string(CouplingCategory c) {
  switch (c) {
    case CouplingCategory::UpsilonAboveKappa: return "upsilon>kappa";
    case CouplingCategory::UpsilonEqualsKappa: return "upsilon=kappa";
    case CouplingCategory::UpsilonBetweenZeroAndKappa: return "0<upsilon<kappa";
    case CouplingCategory::UpsilonZero: return "upsilon=0";
    case CouplingCategory::UpsilonAboveMinusKappa: return "-kappa<upsilon<0";
    case CouplingCategory::UpsilonEqualsMinusKappa: return "upsilon=-kappa";
    case CouplingCategory::UpsilonBelowMinusKappa: return "upsilon<-kappa";
  }
  return "?";
}

std::string to_string(OriginBehavior o) {
  switch (o) {
    case OriginBehavior::AttractiveSingular: return "singular at origin";
    case OriginBehavior::Finite: return "finite at origin";
    case OriginBehavior::RepulsiveSingular: return "repulsive at origin";
  }
  return "?";
}

PotentialProfile classify(const PotentialSpec& spec) {
  if (!spec.is_hellmann())
    throw std::invalid_argument("classify: only hellmann potentials are classified");
  const double k = spec.kappa, u = spec.upsilon;

  CouplingCategory cat;
  if (u == 0.0) cat = CouplingCategory::UpsilonZero;
  else if (u > 0.0) {
    if (u > k) cat = CouplingCategory::UpsilonAboveKappa;
    else if (u == k) cat = CouplingCategory::UpsilonEqualsKappa;
    else cat = CouplingCategory::UpsilonBetweenZeroAndKappa;
  } else {
    if (u > -k) cat = CouplingCategory::UpsilonAboveMinusKappa;
    else if (u == -k) cat = CouplingCategory::UpsilonEqualsMinusKappa;
    else cat = CouplingCategory::UpsilonBelowMinusKappa;
  }

  PotentialProfile profile;
  profile.category = cat;
  const double sum = k + u;
  profile.bounded_below = sum <= 0.0;
  profile.origin = sum > 0.0   ? OriginBehavior::AttractiveSingular
                   : sum == 0.0 ? OriginBehavior::Finite
                                : OriginBehavior::RepulsiveSingular;
  if (profile.bounded_below && (k > 0.0 || u == -k)) profile.minimum = minimum(spec);
  return profile;
}

PotentialMinimum minimum(const PotentialSpec& spec) {
  if (!spec.is_hellmann()) throw std::invalid_argument("minimum: only hellmann potentials supported");
  const double k = spec.kappa, u = spec.upsilon, b = spec.b;
  if (!(k + u <= 0.0))
    domain_fail("minimum: potential not bounded below (requires kappa + upsilon <= 0)");

  if (u == -k) return {0.0, -k * b};  // V monotone increasing, infimum in the r -> 0 limit
  if (k == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};  // repulsive Yukawa

  // u < -k < 0: unique root of |u| e^{-b r}(1 + b r) = k in (0, inf);
  // the left side decreases strictly from |u| > k to 0.
  const double au = -u;
  auto g = [&](double r) { return au * std::exp(-b * r) * (1.0 + b * r) - k; };
  double lo = 1e-8 / b, hi = 50.0 / b;
  while (g(hi) > 0.0) hi *= 2.0;  // root always below ~ (ln(au/k) + ...)/b; safety
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  double r = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {  // Newton polish; g'(r) = -au b^2 r e^{-b r}
    const double gr = g(r);
    const double dg = -au * b * b * r * std::exp(-b * r);
    if (dg == 0.0) break;
    r -= gr / dg;
  }
  if (std::abs(g(r)) > 1e-12 * std::max(1.0, k))
    throw std::runtime_error("minimum: stationarity residual above 1e-12");
  return {r, -k * b / (1.0 + b * r)};
}

std::vector<std::pair<double, double>> profile_samples(const PotentialSpec& spec,
                                                       double r_min, double r_max, int n) {
  if (!(r_min > 0.0 && r_max > r_min)) domain_fail("profile_samples: requires 0 < r_min < r_max");
  if (n < 2) domain_fail("profile_samples: requires n >= 2");
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  const double ratio = std::log(r_max / r_min);
  for (int i = 0; i < n; ++i) {
    const double r = (i == n - 1) ? r_max : r_min * std::exp(ratio * i / (n - 1));
    out.emplace_back(r, evaluate(spec, r));
  }
  return out;
}

}  // namespace salpeter
