#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "ohwalk/lattice.hpp"
#include "ohwalk/report.hpp"
#include "ohwalk/scheme.hpp"

namespace ohwalk {

/// Partition of Q^(N,2) into columns V_{i,j} = { x : shape(x) = (i,j) }.
/// Column |col i,j> is the uniform superposition over V_{i,j} scaled by
/// 1/sqrt(k_{i,j}).
struct ColumnBasis {
  int n = 0;
  /// members[site_index(n, {i,j})] lists the 2N-bit codes of V_{i,j}, ascending.
  std::vector<std::vector<std::uint64_t>> members;

  const std::vector<std::uint64_t>& column(Site s) const { return members[site_index(n, s)]; }
  double normalization(Site s) const;
};

ColumnBasis build_columns(int n, int guard = kDefaultEnumerationGuard);

/// alpha A_(1,0) + beta A_(0,1) restricted to the column subspace.
struct ProjectedOperator {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  /// Unweighted projections <col a| A_(1,0) |col b> and <col a| A_(0,1) |col b>.
  Eigen::MatrixXd part_10;
  Eigen::MatrixXd part_01;
  Eigen::MatrixXd entries;
};

/// Projects the walk by counting edges between every pair of columns at
/// vertex level, then scaling each integer count by 1/sqrt(k_a k_b).
/// Requires alpha, beta >= 0.
ProjectedOperator project_walk(const ColumnBasis& cb, double alpha, double beta);

/// Checks that every vertex of V_{i,j} has the same neighbor counts in the
/// adjacent columns: under (1,0), N-i-j in V_{i+1,j}, j in V_{i,j}, i in
/// V_{i-1,j}; under (0,1), 2(N-i-j) in V_{i,j+1}, j in V_{i+1,j-1},
/// 2i in V_{i-1,j+1}, j in V_{i,j-1}; and none anywhere else.
CheckReport check_column_invariance(const ColumnBasis& cb);

}  // namespace ohwalk
