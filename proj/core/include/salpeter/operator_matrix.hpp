#pragma once

#include <Eigen/Dense>

namespace salpeter {

/// Real symmetric matrix of an operator in an orthonormal trial basis.
struct OperatorMatrix {
  Eigen::MatrixXd entries;

  int dim() const { return static_cast<int>(entries.rows()); }

  /// max |A_ij - A_ji| relative to max |A|.
  double asymmetry() const {
    const double scale = entries.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    return (entries - entries.transpose()).cwiseAbs().maxCoeff() / scale;
  }

  void symmetrize() { entries = 0.5 * (entries + entries.transpose()).eval(); }
};

}  // namespace salpeter
