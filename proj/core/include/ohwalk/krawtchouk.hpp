#pragma once

// Univariate and Tratnik-type bivariate Krawtchouk polynomials.
//
// Evaluation is by truncated hypergeometric sums. The scalar type is a
// template parameter so that the same code runs in double and in an exact
// rational type (e.g. boost::multiprecision::cpp_rational) for oracles.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ohwalk/lattice.hpp"
#include "ohwalk/report.hpp"

namespace ohwalk {

inline constexpr int kRecurrenceGuard = 12;

/// Parameters of the trinomial weight binom(N;x,y) p^x q^y (1-p-q)^(N-x-y).
struct PolyParams {
  int n = 1;
  double p = 0.5;
  double q = 0.25;

  /// p~ = p(1-p-q)/(1-p)
  double p_tilde() const { return p * (1.0 - p - q) / (1.0 - p); }
  /// q~ = q/(1-p)
  double q_tilde() const { return q / (1.0 - p); }

  /// Throws std::invalid_argument unless N >= 0, p, q in (0,1) and p + q < 1.
  void validate() const;
};

namespace detail {

inline void require_degree(int n, int x, int upper, const char* what) {
  if (upper < 0 || n < 0 || x < 0 || n > upper || x > upper) {
    throw std::out_of_range(std::string(what) + ": indices (" + std::to_string(n) + "," + std::to_string(x) +
                            ") outside [0," + std::to_string(upper) + "]");
  }
}

inline void require_pair(int n, Site a, Site b, const char* what) {
  if (n < 0 || !in_triangle(n, a) || !in_triangle(n, b)) {
    throw std::out_of_range(std::string(what) + ": degree " + to_string(a) + " or point " + to_string(b) +
                            " outside triangle of side " + std::to_string(n));
  }
}

/// sum_{l=0}^{min(n,x)} (-n)_l (-x)_l / l! * (1/p)^l * (-m + l)_{n-l} / (-big)_n
///
/// With m == big this is K_n^big(x;p). With m < n the factor (-m + l)_{n-l}
/// crosses zero and vanishes exactly, which is what k_n^m = (-m)_n K_n^m
/// requires; the (-big)_n denominator is nonzero whenever n <= big.
template <class Scalar>
Scalar krawtchouk_scaled_sum(int n, int x, int m, int big, const Scalar& p) {
  const Scalar inv_p = Scalar(1) / p;
  Scalar total(0);
  // term_l = (-n)_l (-x)_l / l! * inv_p^l / prod_{k<l} (k - big)
  Scalar term(1);
  for (int l = 0; l <= n && l <= x; ++l) {
    if (l > 0) {
      term *= Scalar((l - 1) - n) * Scalar((l - 1) - x) * inv_p;
      term /= Scalar(l) * Scalar((l - 1) - big);
    }
    // prod_{k=l}^{n-1} (k - m) / (k - big)
    Scalar tail(1);
    for (int k = l; k < n; ++k) {
      if (k == m) {
        tail = Scalar(0);
        break;
      }
      tail *= Scalar(k - m) / Scalar(k - big);
    }
    total += term * tail;
  }
  return total;
}

}  // namespace detail

/// (a)_l = a (a+1) ... (a+l-1).
template <class Scalar>
Scalar pochhammer(const Scalar& a, int l) {
  Scalar r(1);
  for (int k = 0; k < l; ++k) r *= a + Scalar(k);
  return r;
}

/// K_n^N(x;p) = 2F1(-n, -x; -N; 1/p).
template <class Scalar>
Scalar krawtchouk_uni(int n, int x, int big_n, const Scalar& p) {
  detail::require_degree(n, x, big_n, "krawtchouk_uni");
  return detail::krawtchouk_scaled_sum(n, x, big_n, big_n, p);
}

inline double krawtchouk_uni(int n, int x, int big_n, double p) { return krawtchouk_uni<double>(n, x, big_n, p); }

/// T_{m,n}^N(x,y) = k_m^{N-n}(x;p) k_n^{N-x}(y;q/(1-p)) / (-N)_{m+n}
///                = K_m^{N-n}(x;p) * k_n^{N-x}(y;q/(1-p)) / (-N)_n
/// using (-N)_{m+n} = (-N)_n (-N+n)_m.
template <class Scalar>
Scalar tratnik(int m, int n, int x, int y, int big_n, const Scalar& p, const Scalar& q) {
  detail::require_pair(big_n, {m, n}, {x, y}, "tratnik");
  const Scalar first = detail::krawtchouk_scaled_sum(m, x, big_n - n, big_n - n, p);
  const Scalar second = detail::krawtchouk_scaled_sum(n, y, big_n - x, big_n, q / (Scalar(1) - p));
  return first * second;
}

double tratnik(Site degree, Site point, const PolyParams& params);

/// Squared norm factor rho_{i,j} = binom(N;i,j) p~^i q~^j (1-p-q)^(-i-j),
/// so that t_{i,j} = sqrt(rho_{i,j}) T_{i,j} is orthonormal.
template <class Scalar>
Scalar tratnik_norm_factor(int i, int j, int big_n, const Scalar& p, const Scalar& q) {
  const Scalar r = Scalar(1) - p - q;
  const Scalar pt = p * r / (Scalar(1) - p);
  const Scalar qt = q / (Scalar(1) - p);
  Scalar rho(1);
  // binom(N; i, j) built as a product of ratios to stay exact in rationals.
  for (int k = 1; k <= i; ++k) rho *= Scalar(big_n - i + k) / Scalar(k);
  for (int k = 1; k <= j; ++k) rho *= Scalar(big_n - i - j + k) / Scalar(k);
  for (int k = 0; k < i; ++k) rho *= pt / r;
  for (int k = 0; k < j; ++k) rho *= qt / r;
  return rho;
}

/// Trinomial weight w(x,y) = binom(N;x,y) p^x q^y (1-p-q)^(N-x-y).
template <class Scalar>
Scalar trinomial_weight(int x, int y, int big_n, const Scalar& p, const Scalar& q) {
  const Scalar r = Scalar(1) - p - q;
  Scalar w(1);
  for (int k = 1; k <= x; ++k) w *= Scalar(big_n - x + k) / Scalar(k) * p;
  for (int k = 1; k <= y; ++k) w *= Scalar(big_n - x - y + k) / Scalar(k) * q;
  for (int k = 0; k < big_n - x - y; ++k) w *= r;
  return w;
}

/// Orthonormal t_{i,j}^N(x,y): sum_{x,y} w(x,y) t_{i,j} t_{k,l} = delta.
double tratnik_orthonormal(Site degree, Site point, const PolyParams& params);

double trinomial_weight(Site point, const PolyParams& params);

/// lambda_{x,y} = alpha (N - 2x) + beta (2N - 2x - 4y).
double spectrum(int n, double alpha, double beta, int x, int y);

/// Eigen-decomposition of the lattice Hamiltonian from the orthonormal
/// polynomials at p = 1/2, q = 1/4. Rows of `vectors` are lattice sites
/// (i,j); columns are spectral points (x,y); both in site_index order.
struct SpectralData {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd vectors;
};

/// U[(i,j),(x,y)] = sqrt(w(x,y)) t_{i,j}^N(x,y) and lambda_{x,y}.
SpectralData build_spectral(int n, double alpha, double beta);

/// Exhaustive check of the x-recurrence (3 terms) and y-recurrence (7 terms)
/// of T for every degree and point, and of the contiguity relation of t
/// whose eigenvalue is lambda_{x,y}. The contiguity relation only holds at
/// p = 1/2, q = 1/4; for other parameters it is skipped. Out-of-range
/// polynomials count as zero. Throws GuardExceeded above `guard`.
/// Scaled residuals are divided by max(1, sum of |term|) of the relation.
enum class Residual { Absolute, Scaled };
CheckReport check_recurrences(const PolyParams& params, double alpha = 1.0, double beta = 2.0,
                              double tol = 1e-10, int guard = kRecurrenceGuard,
                              Residual residual = Residual::Absolute);

/// sum_{x+y<=N} binom(N;x,y) s^x t^y T_{i,j}(x,y) against
/// (1+s+t)^(N-i-j) (1 + (p-1)/p s + t)^i (1 + (p+q-1)/q t)^j for every (i,j).
/// The deviation is relative to the larger of |rhs| and sum |lhs terms|.
CheckReport check_generating_function(const PolyParams& params, double s, double t, double tol = 1e-9);

/// max |U^T U - I| over the spectral table.
double orthogonality_defect(const SpectralData& sd);

}  // namespace ohwalk
