#pragma once

#include <Eigen/Dense>

namespace ohwalk {

struct ExpmStats {
  int squarings = 0;
  int series_order = 0;
  /// Upper bound on the truncation error of the scaled series, before squaring.
  double truncation_bound = 0.0;
};

/// e^A by scaling and squaring with a truncated Taylor series. A is scaled
/// by 2^-s until ||A||_1 / 2^s <= 1/2, the series is summed until its tail
/// bound falls below `tail_tol`, then squared s times.
/// Throws std::domain_error when A has non-finite entries.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a, ExpmStats* stats = nullptr, double tail_tol = 1e-17);

}  // namespace ohwalk
