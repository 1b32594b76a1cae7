#include "cli/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ohwalk/dynamics.hpp"
#include "ohwalk/krawtchouk.hpp"
#include "ohwalk/lattice.hpp"
#include "ohwalk/projection.hpp"
#include "ohwalk/scheme.hpp"

namespace ohwalk::cli {

namespace {

void require_guard(const char* suite, int n, int limit) {
  if (n < 1) throw std::invalid_argument(std::string(suite) + " suite needs N >= 1");
  if (n > limit) throw GuardExceeded(std::string(suite) + " suite", n, limit);
}

std::string format_tol(double tol) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.0e", tol);
  return buffer;
}

constexpr std::array<double, 5> kEquivalenceTimes{0.3, std::numbers::pi / 5, std::numbers::pi / 4,
                                                  std::numbers::pi / 2, 1.7};

}  // namespace

std::vector<CheckReport> suite_scheme(int n, std::optional<int> guard) {
  const int limit = guard.value_or(kDefaultEnumerationGuard);
  require_guard("scheme", n, limit);
  EnumerationOptions options;
  options.guard = limit;
  std::vector<CheckReport> out;
  out.push_back(check_scheme_properties(n, options));
  out.push_back(verify_bose_mesner(n, options).report);
  return out;
}

std::vector<CheckReport> suite_projection(int n, double alpha, double beta, std::optional<int> guard) {
  const int limit = guard.value_or(kDefaultEnumerationGuard);
  require_guard("projection", n, limit);
  const ColumnBasis cb = build_columns(n, limit);
  std::vector<CheckReport> out;
  out.push_back(check_column_invariance(cb));

  CheckReport match;
  match.name = "projection matches lattice Hamiltonian N=" + std::to_string(n);
  const ProjectedOperator projected = project_walk(cb, alpha, beta);
  const LatticeOperator h = build_hamiltonian(n, alpha, beta);
  const double deviation = (projected.entries - h.matrix).cwiseAbs().maxCoeff();
  match.record_deviation(deviation, kProjectionTol,
                         "max entry deviation " + std::to_string(deviation) + " above " + format_tol(kProjectionTol));
  out.push_back(std::move(match));
  return out;
}

std::vector<CheckReport> suite_polynomials(int n, double alpha, double beta, std::optional<int> guard) {
  const int limit = guard.value_or(kRecurrenceGuard);
  require_guard("polynomials", n, limit);
  std::vector<CheckReport> out;
  for (const PolyParams params : {PolyParams{n, 0.5, 0.25}, PolyParams{n, 1.0 / 3.0, 0.2}}) {
    const Residual residual = n <= kAbsoluteRecurrenceLimit ? Residual::Absolute : Residual::Scaled;
    CheckReport r = check_recurrences(params, alpha, beta, kRecurrenceTol, limit, residual);
    r.name += " p=" + std::to_string(params.p) + " q=" + std::to_string(params.q);
    out.push_back(std::move(r));
  }

  CheckReport gf;
  gf.name = "generating function N=" + std::to_string(n) + " at " + std::to_string(kGeneratingSamples) + " points";
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<unsigned>(n));
  std::uniform_real_distribution<double> unit(-0.9, 0.9);
  for (int k = 0; k < kGeneratingSamples; ++k) {
    const double s = unit(rng), t = unit(rng);
    gf.merge(check_generating_function(PolyParams{n, 0.5, 0.25}, s, t, kGeneratingTol));
  }
  out.push_back(std::move(gf));

  const SpectralData sd = build_spectral(n, alpha, beta);
  CheckReport spectral;
  spectral.name = "eigenvectors N=" + std::to_string(n);
  const double ortho = orthogonality_defect(sd);
  spectral.record_deviation(ortho, kOrthogonalityTol, "max |U^T U - I| = " + std::to_string(ortho));
  const double residual = eigen_residual(sd);
  spectral.record_deviation(residual, kEigenResidualTol, "max |HU - U Lambda| = " + std::to_string(residual));
  out.push_back(std::move(spectral));
  return out;
}

std::vector<CheckReport> suite_dynamics(int n, double alpha, double beta, std::optional<int> guard) {
  const int limit = guard.value_or(kRecurrenceGuard);
  require_guard("dynamics", n, limit);
  const SpectralData sd = build_spectral(n, alpha, beta);
  const LatticeOperator h = build_hamiltonian(n, alpha, beta);
  const auto sites = all_sites(n);
  const Site origin{0, 0};

  CheckReport equivalence;
  equivalence.name = "closed form vs spectral vs expm N=" + std::to_string(n);
  CheckReport unitarity;
  unitarity.name = "unitarity N=" + std::to_string(n);
  CheckReport reversal;
  reversal.name = "time reversal N=" + std::to_string(n);

  for (const double t : kEquivalenceTimes) {
    const AmplitudeField spectral = field_spectral(sd, origin, t);
    const AmplitudeField oracle = amplitude_expm_oracle(h, origin, t);
    const AmplitudeField backward = field_spectral(sd, origin, -t);
    double worst = 0.0, reversed = 0.0;
    for (std::size_t k = 0; k < sites.size(); ++k) {
      const Complex closed = amplitude_closed_form(n, alpha, beta, sites[k], t);
      worst = std::max({worst, std::abs(closed - spectral.amplitudes[k]), std::abs(closed - oracle.amplitudes[k]),
                        std::abs(spectral.amplitudes[k] - oracle.amplitudes[k])});
      reversed = std::max(reversed, std::abs(backward.amplitudes[k] - std::conj(spectral.amplitudes[k])));
    }
    equivalence.record_deviation(worst, kEquivalenceTol, "t=" + std::to_string(t) + " deviation " + std::to_string(worst));
    reversal.record_deviation(reversed, kEquivalenceTol, "t=" + std::to_string(t) + " deviation " + std::to_string(reversed));
    const double drift = std::abs(spectral.norm_squared() - 1.0);
    unitarity.record_deviation(drift, kUnitarityTol, "t=" + std::to_string(t) + " norm drift " + std::to_string(drift));
  }
  return {std::move(equivalence), std::move(unitarity), std::move(reversal)};
}

std::vector<std::string> expand_suite(const std::string& suite) {
  static const std::vector<std::string> all{"scheme", "projection", "polynomials", "dynamics"};
  if (suite == "all") return all;
  if (std::find(all.begin(), all.end(), suite) != all.end()) return {suite};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace ohwalk::cli
