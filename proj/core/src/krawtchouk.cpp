#include "ohwalk/krawtchouk.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>
#include <limits>
#include <vector>

#include "ohwalk/scheme.hpp"

namespace ohwalk {

void PolyParams::validate() const {
  if (n < 0) throw std::invalid_argument("polynomial degree cap N must be non-negative");
  if (!(p > 0.0 && p < 1.0) || !(q > 0.0 && q < 1.0) || !(p + q < 1.0)) {
    throw std::invalid_argument("require 0 < p, q < 1 and p + q < 1; got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  }
}

double tratnik(Site degree, Site point, const PolyParams& params) {
  params.validate();
  return tratnik<double>(degree.i, degree.j, point.i, point.j, params.n, params.p, params.q);
}

double tratnik_orthonormal(Site degree, Site point, const PolyParams& params) {
  const double value = tratnik(degree, point, params);
  return std::sqrt(tratnik_norm_factor<double>(degree.i, degree.j, params.n, params.p, params.q)) * value;
}

double trinomial_weight(Site point, const PolyParams& params) {
  params.validate();
  if (!in_triangle(params.n, point)) throw std::out_of_range("weight point " + to_string(point) + " outside triangle");
  return trinomial_weight<double>(point.i, point.j, params.n, params.p, params.q);
}

double spectrum(int n, double alpha, double beta, int x, int y) {
  if (n < 0 || !in_triangle(n, {x, y})) {
    throw std::out_of_range("spectral point (" + std::to_string(x) + "," + std::to_string(y) +
                            ") outside triangle of side " + std::to_string(n));
  }
  return alpha * (n - 2 * x) + beta * (2 * n - 2 * x - 4 * y);
}

SpectralData build_spectral(int n, double alpha, double beta) {
  if (n < 0) throw std::invalid_argument("N must be non-negative");
  const PolyParams params{n, 0.5, 0.25};
  const auto sites = all_sites(n);
  const auto dim = static_cast<Eigen::Index>(sites.size());

  SpectralData sd;
  sd.n = n;
  sd.alpha = alpha;
  sd.beta = beta;
  sd.eigenvalues.resize(dim);
  sd.vectors.resize(dim, dim);

  std::vector<double> norms(sites.size());
  for (std::size_t r = 0; r < sites.size(); ++r) {
    norms[r] = std::sqrt(tratnik_norm_factor<double>(sites[r].i, sites[r].j, n, params.p, params.q));
  }
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Site point = sites[static_cast<std::size_t>(c)];
    sd.eigenvalues(c) = spectrum(n, alpha, beta, point.i, point.j);
    const double root_w = std::sqrt(trinomial_weight<double>(point.i, point.j, n, params.p, params.q));
    for (Eigen::Index r = 0; r < dim; ++r) {
      const Site degree = sites[static_cast<std::size_t>(r)];
      sd.vectors(r, c) = root_w * norms[static_cast<std::size_t>(r)] *
                         tratnik<double>(degree.i, degree.j, point.i, point.j, n, params.p, params.q);
    }
  }
  return sd;
}

CheckReport check_recurrences(const PolyParams& params, double alpha, double beta, double tol, int guard,
                              Residual residual) {
  params.validate();
  const int n = params.n;
  if (n > guard) throw GuardExceeded("check_recurrences", n, guard);

  const double p = params.p, q = params.q, r = 1.0 - p - q;
  const auto sites = all_sites(n);
  const bool contiguity = p == 0.5 && q == 0.25;

  CheckReport report;
  report.name = std::string(residual == Residual::Scaled ? "scaled " : "") + "recurrences N=" + std::to_string(n);

  // Terms are (coefficient, value) pairs; the residual is lhs - sum of terms.
  struct Term {
    double coefficient;
    double value;
  };
  auto deviation = [residual](double lhs, std::initializer_list<Term> terms) {
    double rhs = 0.0, scale = std::abs(lhs);
    for (const Term& t : terms) {
      rhs += t.coefficient * t.value;
      scale += std::abs(t.coefficient * t.value);
    }
    const double d = std::abs(lhs - rhs);
    return residual == Residual::Scaled ? d / std::max(1.0, scale) : d;
  };

  for (const Site point : sites) {
    const int x = point.i, y = point.j;
    // T and t over all degrees at this point; out-of-triangle degrees are zero.
    std::vector<double> big_t(sites.size()), small_t(sites.size());
    for (std::size_t k = 0; k < sites.size(); ++k) {
      big_t[k] = tratnik<double>(sites[k].i, sites[k].j, x, y, n, p, q);
      small_t[k] = std::sqrt(tratnik_norm_factor<double>(sites[k].i, sites[k].j, n, p, q)) * big_t[k];
    }
    auto at = [&](const std::vector<double>& values, int i, int j) {
      return in_triangle(n, {i, j}) ? values[site_index(n, {i, j})] : 0.0;
    };
    const double lambda = spectrum(n, alpha, beta, x, y);

    for (const Site degree : sites) {
      const int i = degree.i, j = degree.j;
      const double c = at(big_t, i, j);
      auto diff = [&](int di, int dj) { return at(big_t, i + di, j + dj) - c; };
      auto where = [&] { return " at degree " + to_string(degree) + " point " + to_string(point); };

      const double dx = deviation(x * c, {{-p * (n - i - j), diff(1, 0)}, {-(1.0 - p) * i, diff(-1, 0)}});
      report.max_deviation = std::max(report.max_deviation, dx);
      report.check(dx <= tol, [&] { return "x-recurrence" + where(); });

      const double dy = deviation(y * c, {{p * q / (1.0 - p) * (n - i - j), diff(1, 0)},
                                          {-q / (1.0 - p) * (n - i - j), diff(0, 1)},
                                          {q * i, diff(-1, 0)},
                                          {-r * j, diff(0, -1)},
                                          {-p * r / (1.0 - p) * j, diff(1, -1)},
                                          {-q / (1.0 - p) * i, diff(-1, 1)}});
      report.max_deviation = std::max(report.max_deviation, dy);
      report.check(dy <= tol, [&] { return "y-recurrence" + where(); });

      if (contiguity) {
        auto t = [&](int ii, int jj) { return at(small_t, ii, jj); };
        const double dc = deviation(lambda * t(i, j), {{alpha * std::sqrt(double(i + 1) * (n - i - j)), t(i + 1, j)},
                                                       {beta * std::sqrt(2.0 * (j + 1) * (n - i - j)), t(i, j + 1)},
                                                       {alpha * j, t(i, j)},
                                                       {alpha * std::sqrt(double(i) * (n + 1 - i - j)), t(i - 1, j)},
                                                       {beta * std::sqrt(2.0 * j * (n + 1 - i - j)), t(i, j - 1)},
                                                       {beta * std::sqrt(2.0 * i * (j + 1)), t(i - 1, j + 1)},
                                                       {beta * std::sqrt(2.0 * (i + 1) * j), t(i + 1, j - 1)}});
        report.max_deviation = std::max(report.max_deviation, dc);
        report.check(dc <= tol, [&] { return "contiguity relation" + where(); });
      }
    }
  }
  return report;
}

CheckReport check_generating_function(const PolyParams& params, double s, double t, double tol) {
  params.validate();
  const int n = params.n;
  const double p = params.p, q = params.q;
  const auto sites = all_sites(n);

  CheckReport report;
  report.name = "generating function N=" + std::to_string(n);

  for (const Site degree : sites) {
    const int i = degree.i, j = degree.j;
    double lhs = 0.0, scale = 0.0;
    for (const Site point : sites) {
      const double term = static_cast<double>(trinomial(n, point.i, point.j)) * std::pow(s, point.i) *
                          std::pow(t, point.j) * tratnik<double>(i, j, point.i, point.j, n, p, q);
      lhs += term;
      scale += std::abs(term);
    }
    const double rhs = std::pow(1.0 + s + t, n - i - j) * std::pow(1.0 + (p - 1.0) / p * s + t, i) *
                       std::pow(1.0 + (p + q - 1.0) / q * t, j);
    const double denom = std::max({std::abs(rhs), scale, std::numeric_limits<double>::min()});
    report.record_deviation(std::abs(lhs - rhs) / denom, tol,
                            "generating function at degree " + to_string(degree) + ": lhs=" + std::to_string(lhs) +
                                " rhs=" + std::to_string(rhs));
  }
  return report;
}

double orthogonality_defect(const SpectralData& sd) {
  const auto dim = sd.vectors.cols();
  const Eigen::MatrixXd gram = sd.vectors.transpose() * sd.vectors;
  return (gram - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

}  // namespace ohwalk
