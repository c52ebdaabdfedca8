#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace salpeter {

enum class PotentialKind { Hellmann, ExponentialWell };

/// Radial interaction, natural units (energies and inverse lengths in
/// units of the constituent mass).
///
/// Hellmann:          V(r) = -kappa/r - upsilon * exp(-b r) / r
/// ExponentialWell:   V(r) = -v0 * exp(-b r)
struct PotentialSpec {
  PotentialKind kind = PotentialKind::Hellmann;
  double kappa = 0.0;    // Coulomb coupling, >= 0
  double upsilon = 0.0;  // Yukawa coupling, either sign
  double b = 1.0;        // slope, > 0
  double v0 = 0.0;       // well depth, > 0 (exponential well only)

  static PotentialSpec hellmann(double kappa, double upsilon, double b);
  static PotentialSpec exponential_well(double v0, double b);

  bool is_hellmann() const { return kind == PotentialKind::Hellmann; }
  /// True when V carries a 1/r piece.
  bool has_coulomb_singularity() const {
    return is_hellmann() && (kappa != 0.0 || upsilon != 0.0);
  }
};

/// Relation of the two couplings; the seven-way split refines the four
/// boundedness/shape cases by the sign of upsilon. Labels are local to
/// this library.
enum class CouplingCategory {
  UpsilonAboveKappa,            // upsilon > kappa
  UpsilonEqualsKappa,           // upsilon = kappa > 0
  UpsilonBetweenZeroAndKappa,   // 0 < upsilon < kappa
  UpsilonZero,                  // upsilon = 0 (pure Coulomb, or free)
  UpsilonAboveMinusKappa,       // -kappa < upsilon < 0
  UpsilonEqualsMinusKappa,      // upsilon = -kappa < 0
  UpsilonBelowMinusKappa,       // upsilon < -kappa
};

enum class OriginBehavior { AttractiveSingular, Finite, RepulsiveSingular };

struct PotentialMinimum {
  double r_star;  // 0 when the infimum is attained only in the r -> 0 limit
  double v_min;
};

struct PotentialProfile {
  CouplingCategory category;
  bool bounded_below;
  OriginBehavior origin;
  std::optional<PotentialMinimum> minimum;
};

std::string to_string(CouplingCategory c);
std::string to_string(OriginBehavior o);

/// V(r), r > 0.
double evaluate(const PotentialSpec& spec, double r);

/// r dV/dr, the virial weight. For Hellmann this is
/// kappa/r + upsilon exp(-b r)(1 + b r)/r.
double radial_force(const PotentialSpec& spec, double r);

/// Shape classification of a Hellmann spec from the (kappa, upsilon)
/// sign relations.
PotentialProfile classify(const PotentialSpec& spec);

/// Location and value of the potential infimum; requires kappa+upsilon <= 0.
/// upsilon < -kappa with kappa > 0: interior stationary point (solved to
/// |residual| < 1e-12). upsilon = -kappa: infimum -kappa*b in the r -> 0
/// limit, reported with r_star = 0. kappa = 0, upsilon < 0: infimum 0 in
/// the r -> infinity limit.
PotentialMinimum minimum(const PotentialSpec& spec);

/// n logarithmically spaced samples (r, V(r)) on [r_min, r_max].
std::vector<std::pair<double, double>> profile_samples(const PotentialSpec& spec,
                                                       double r_min, double r_max, int n);

}  // namespace salpeter
