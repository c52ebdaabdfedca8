#pragma once

#include "salpeter/basis.hpp"
#include "salpeter/operators.hpp"
#include "salpeter/potentials.hpp"

namespace salpeter {

/// Relativistic virial balance of a trial state. On an exact eigenstate
/// the two sides coincide; the residual measures eigenstate quality.
struct VirialReport {
  double lhs;       // < sum_i p^2 / sqrt(p^2 + m_i^2) >, always >= 0
  double rhs;       // < r dV/dr >
  double residual;  // |lhs - rhs| / max(|lhs|, |rhs|)
};

VirialReport virial_check(const RadialState& state, const MassConfig& masses,
                          const PotentialSpec& spec);

}  // namespace salpeter
