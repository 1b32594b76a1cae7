#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "ohwalk/krawtchouk.hpp"
#include "ohwalk/lattice.hpp"

namespace ohwalk {

using Complex = std::complex<double>;

/// 1-excitation Hamiltonian on the triangular lattice, indexed by site_index.
struct LatticeOperator {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  Eigen::MatrixXd matrix;
};

/// Complex amplitude per lattice site at one time, evolved from `source`.
struct AmplitudeField {
  int n = 0;
  double time = 0.0;
  Site source;
  std::vector<Complex> amplitudes;

  Complex at(Site s) const { return amplitudes[site_index(n, s)]; }
  double probability(Site s) const { return std::norm(at(s)); }
  double norm_squared() const;
};

/// Builds H from its action on |e_{i,j}):
///   alpha sqrt((i+1)(N-i-j))  -> (i+1, j)     beta sqrt(2(j+1)(N-i-j)) -> (i, j+1)
///   alpha sqrt(i(N+1-i-j))    -> (i-1, j)     beta sqrt(2j(N+1-i-j))   -> (i, j-1)
///   beta sqrt(2(i+1)j)        -> (i+1, j-1)   beta sqrt(2i(j+1))       -> (i-1, j+1)
///   alpha j                   -> (i, j)
/// The lowering terms are filled independently of the raising terms and
/// must equal their transposes; std::logic_error otherwise. Requires N >= 1.
LatticeOperator build_hamiltonian(int n, double alpha, double beta);

/// max |(H U - U Lambda)_{rc}| for the operator built with sd's couplings.
double eigen_residual(const SpectralData& sd);

/// f_{(i,j)}(t) = (e_{i,j}| e^{-itH} |e_{0,0}) from the generating function:
///   e^{-iN(alpha+2beta)t} sqrt(2^j)/4^N sqrt(binom(N;i,j))
///   (1+2z1+z2)^(N-i-j) (1-2z1+z2)^i (1-z2)^j,
/// z1 = e^{2i(alpha+beta)t}, z2 = e^{4i beta t}, with 0^0 = 1.
Complex amplitude_closed_form(int n, double alpha, double beta, Site target, double t);

/// sum_{x,y} U[target,(x,y)] U[source,(x,y)] e^{-i lambda_{x,y} t}.
Complex amplitude_spectral(const SpectralData& sd, Site source, Site target, double t);

/// Full field e^{-itH}|source) from the spectral table.
AmplitudeField field_spectral(const SpectralData& sd, Site source, double t);

/// Independent oracle: e^{-itH}|source) by scaling and squaring on -iHt,
/// without using the eigenbasis.
AmplitudeField amplitude_expm_oracle(const LatticeOperator& h, Site source, double t);

/// One field per time from the spectral table.
std::vector<AmplitudeField> evolve_field(const SpectralData& sd, Site source, std::span<const double> times);

}  // namespace ohwalk
