#include "ohwalk/expm.hpp"

#include <cmath>
#include <stdexcept>

namespace ohwalk {

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a, ExpmStats* stats, double tail_tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm needs a square matrix");
  if (!a.allFinite()) throw std::domain_error("expm: matrix has non-finite entries");

  const auto dim = a.rows();
  const double norm1 = dim == 0 ? 0.0 : a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Eigen::MatrixXcd scaled = a / std::ldexp(1.0, squarings);
  const double scaled_norm = norm1 / std::ldexp(1.0, squarings);

  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
  // ||B^(m+1)/(m+1)!|| bound of the next term; tail <= bound / (1 - ||B||/(m+2)) <= 2 bound.
  double bound = scaled_norm;
  int order = 0;
  while (2.0 * bound > tail_tol && order < 60) {
    ++order;
    term = (term * scaled) / static_cast<double>(order);
    result += term;
    bound *= scaled_norm / (order + 1);
  }
  for (int k = 0; k < squarings; ++k) result = result * result;

  if (stats) {
    stats->squarings = squarings;
    stats->series_order = order;
    stats->truncation_bound = 2.0 * bound;
  }
  return result;
}

}  // namespace ohwalk
