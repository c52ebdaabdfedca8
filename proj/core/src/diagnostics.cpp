#include "salpeter/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace salpeter {

VirialReport virial_check(const RadialState& state, const MassConfig& masses,
                          const PotentialSpec& spec) {
  if (state.coefficients.size() != state.basis.dim)
    throw std::domain_error("virial_check: coefficient vector does not match the basis dimension");
  const double norm = state.coefficients.norm();
  if (std::abs(norm - 1.0) > 1e-8)
    throw std::domain_error("virial_check: state coefficients must have unit norm");

  const double m1 = masses.m1, m2 = masses.m2;
  const OperatorMatrix kinetic_derivative = momentum_weight_matrix(
      state.basis, [m1, m2](double p) {
        return p * p / std::hypot(p, m1) + p * p / std::hypot(p, m2);
      });
  const OperatorMatrix force = radial_force_matrix(state.basis, spec);

  VirialReport report;
  report.lhs = state.coefficients.dot(kinetic_derivative.entries * state.coefficients);
  report.rhs = state.coefficients.dot(force.entries * state.coefficients);
  const double scale = std::max(std::abs(report.lhs), std::abs(report.rhs));
  report.residual = scale > 0.0 ? std::abs(report.lhs - report.rhs) / scale : 0.0;
  return report;
}

}  // namespace salpeter
