#include "ohwalk/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "ohwalk/expm.hpp"
#include "ohwalk/scheme.hpp"

namespace ohwalk {

double AmplitudeField::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

LatticeOperator build_hamiltonian(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("build_hamiltonian requires N >= 1");
  const auto dim = static_cast<Eigen::Index>(site_count(n));
  Eigen::MatrixXd raising = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd lowering = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(dim);

  auto put = [n](Eigen::MatrixXd& m, Site target, Site source, double value) {
    if (!in_triangle(n, target)) return;
    m(static_cast<Eigen::Index>(site_index(n, target)), static_cast<Eigen::Index>(site_index(n, source))) = value;
  };

  for (const Site s : all_sites(n)) {
    const int i = s.i, j = s.j;
    put(raising, {i + 1, j}, s, alpha * std::sqrt(double(i + 1) * (n - i - j)));
    put(raising, {i, j + 1}, s, beta * std::sqrt(2.0 * (j + 1) * (n - i - j)));
    put(raising, {i + 1, j - 1}, s, beta * std::sqrt(2.0 * (i + 1) * j));
    put(lowering, {i - 1, j}, s, alpha * std::sqrt(double(i) * (n + 1 - i - j)));
    put(lowering, {i, j - 1}, s, beta * std::sqrt(2.0 * j * (n + 1 - i - j)));
    put(lowering, {i - 1, j + 1}, s, beta * std::sqrt(2.0 * i * (j + 1)));
    diagonal(static_cast<Eigen::Index>(site_index(n, s))) = alpha * j;
  }
  if (raising.transpose() != lowering) {
    throw std::logic_error("lowering terms of H are not the transpose of the raising terms");
  }

  LatticeOperator h;
  h.n = n;
  h.alpha = alpha;
  h.beta = beta;
  h.matrix = raising + lowering;
  h.matrix.diagonal() = diagonal;
  return h;
}

double eigen_residual(const SpectralData& sd) {
  const LatticeOperator h = build_hamiltonian(sd.n, sd.alpha, sd.beta);
  const Eigen::MatrixXd lhs = h.matrix * sd.vectors;
  const Eigen::MatrixXd rhs = sd.vectors * sd.eigenvalues.asDiagonal();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

namespace {

Complex ipow(Complex base, int exponent) {
  Complex result(1.0, 0.0);
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace

Complex amplitude_closed_form(int n, double alpha, double beta, Site target, double t) {
  if (n < 0 || !in_triangle(n, target)) throw std::out_of_range("target " + to_string(target) + " outside lattice");
  const int i = target.i, j = target.j;
  const Complex z1 = std::polar(1.0, 2.0 * (alpha + beta) * t);
  const Complex z2 = std::polar(1.0, 4.0 * beta * t);
  const Complex phase = std::polar(1.0, -n * (alpha + 2.0 * beta) * t);
  const double prefactor = std::sqrt(std::ldexp(1.0, j)) / std::ldexp(1.0, 2 * n) *
                           std::sqrt(static_cast<double>(trinomial(n, i, j)));
  return phase * prefactor * ipow(1.0 + 2.0 * z1 + z2, n - i - j) * ipow(1.0 - 2.0 * z1 + z2, i) *
         ipow(1.0 - z2, j);
}

Complex amplitude_spectral(const SpectralData& sd, Site source, Site target, double t) {
  const auto src = static_cast<Eigen::Index>(site_index(sd.n, source));
  const auto dst = static_cast<Eigen::Index>(site_index(sd.n, target));
  Complex total(0.0, 0.0);
  for (Eigen::Index k = 0; k < sd.vectors.cols(); ++k) {
    total += sd.vectors(dst, k) * sd.vectors(src, k) * std::polar(1.0, -sd.eigenvalues(k) * t);
  }
  return total;
}

AmplitudeField field_spectral(const SpectralData& sd, Site source, double t) {
  const auto src = static_cast<Eigen::Index>(site_index(sd.n, source));
  const auto dim = sd.vectors.cols();
  Eigen::VectorXcd coefficients(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    coefficients(k) = sd.vectors(src, k) * std::polar(1.0, -sd.eigenvalues(k) * t);
  }
  const Eigen::VectorXcd psi = sd.vectors.cast<Complex>() * coefficients;

  AmplitudeField field;
  field.n = sd.n;
  field.time = t;
  field.source = source;
  field.amplitudes.assign(psi.data(), psi.data() + psi.size());
  return field;
}

AmplitudeField amplitude_expm_oracle(const LatticeOperator& h, Site source, double t) {
  const auto src = static_cast<Eigen::Index>(site_index(h.n, source));
  const Eigen::MatrixXcd generator = Complex(0.0, -t) * h.matrix.cast<Complex>();
  const Eigen::MatrixXcd propagator = expm(generator);

  AmplitudeField field;
  field.n = h.n;
  field.time = t;
  field.source = source;
  field.amplitudes.resize(static_cast<std::size_t>(propagator.rows()));
  for (Eigen::Index r = 0; r < propagator.rows(); ++r) field.amplitudes[static_cast<std::size_t>(r)] = propagator(r, src);
  return field;
}

std::vector<AmplitudeField> evolve_field(const SpectralData& sd, Site source, std::span<const double> times) {
  std::vector<AmplitudeField> out;
  out.reserve(times.size());
  for (const double t : times) out.push_back(field_spectral(sd, source, t));
  return out;
}

}  // namespace ohwalk
