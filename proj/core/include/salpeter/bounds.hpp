#pragma once

#include <optional>
#include <string>

#include "salpeter/potentials.hpp"

namespace salpeter {

/// Critical Coulomb coupling 4/pi of the equal-mass semirelativistic
/// problem; beyond it the Hamiltonian is unbounded from below.
double critical_coupling();

/// Lower bound 2m sqrt(1 - (pi alpha / 4)^2) on the spectrum of the
/// Coulomb problem, valid for 0 <= alpha <= 4/pi. Throws for larger
/// couplings (operator unbounded below).
double herbst_bound(double alpha, double m);

/// Improved Coulomb lower bound 2m sqrt((1 + sqrt(1 - alpha^2)) / 2),
/// valid for 0 <= alpha <= 1; dominates the Herbst bound there.
double improved_coulomb_bound(double alpha, double m);

enum class BoundMethod { Herbst, ImprovedCoulomb, PotentialMinimum, BestOf };
enum class BoundsMode { Paper, Best };

std::string to_string(BoundMethod m);
std::string to_string(BoundsMode m);

/// Spectral lower bound report. bounded_below records what the
/// implemented comparison methods certify: a pointwise Coulomb
/// domination with alpha_eff = kappa + max(upsilon, 0), or the
/// potential minimum when kappa + upsilon <= 0.
struct BoundsReport {
  bool bounded_below = false;
  std::optional<double> lower_bound;  // absolute energy, present iff bounded_below
  BoundMethod method = BoundMethod::BestOf;
  double alpha_eff = 0.0;
  BoundsMode mode = BoundsMode::Best;
};

/// Mode Paper reproduces the published chain (potential minimum when
/// kappa + upsilon <= 0, else the Coulomb bounds at alpha_eff); mode
/// Best takes the maximum over every applicable method.
BoundsReport hellmann_lower_bound(const PotentialSpec& spec, double m, BoundsMode mode);

struct CountReport {
  bool condition_ok = false;
  std::optional<std::string> failure_reason;
  std::optional<double> n_bound;  // present iff condition_ok
  double c_used = 0.0;
};

/// Checks V <= 0 together with V in L^{3/2} and L^3, by closed-form
/// integrability analysis of the potential family.
CountReport check_condition_L(const PotentialSpec& spec, double m);

/// Upper bound N <= C/(12 pi) * int r^2 [|V|(|V| + 4m)]^{3/2} dr on the
/// number of bound states, C = 14.107590867 (m > 0) or 6.074898097
/// (m = 0). Requires check_condition_L to pass.
CountReport count_bound(const PotentialSpec& spec, double m);

}  // namespace salpeter
