#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ohwalk/dynamics.hpp"
#include "ohwalk/krawtchouk.hpp"
#include "ohwalk/lattice.hpp"

namespace ohwalk {

inline constexpr double kDefaultTransferTol = 1e-9;

enum class TransferKind { None, PST, FR, Revival };
std::string to_string(TransferKind kind);

struct TransferReport {
  TransferKind kind = TransferKind::None;
  Site source;
  std::vector<Site> targets;
  double time = 0.0;
  /// Total probability on `targets`.
  double fidelity = 0.0;
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

enum class ParityTag { EvenOdd, OddEven, Other };
std::string to_string(ParityTag tag);

/// Which congruence family yields the predicted transfer time:
/// A: 2 alpha T = (2m+1) pi, 2 beta T = 2n pi;  B: 2 alpha T = 2m pi, 2 beta T = (2n+1) pi.
enum class PstFamily { None, OddAlpha, OddBeta };

/// alpha/beta = a/b in lowest terms with its parity classification.
struct RatioClass {
  std::int64_t a = 0;
  std::int64_t b = 1;
  ParityTag tag = ParityTag::Other;
  bool pst_predicted = false;
  PstFamily family = PstFamily::None;
  /// Smallest positive T with z1 = -1 and z2 = 1 for alpha = a, beta = b.
  std::optional<double> predicted_time;
};

/// Reduces a/b and classifies its parities. Throws std::invalid_argument for
/// b <= 0 or a < 0.
RatioClass classify_ratio(std::int64_t a, std::int64_t b);

/// Predicted PST time when the couplings are alpha = c a, beta = c b with
/// c = beta / b > 0; the time scales as 1/c.
std::optional<double> predicted_pst_time(const RatioClass& ratio, double beta);

/// Period of every |amplitude|^2 for alpha = c a, beta = c b: all spectral
/// gaps are integer multiples of 2c, so the period is pi / c.
double probability_period(const RatioClass& ratio, double beta);

/// The j = 0 row {(0,0), (1,0), ..., (N,0)}.
std::vector<Site> bottom_edge(int n);

/// PST from `source` to `target` (default (N,0)) iff |amplitude|^2 >= 1 - tol.
TransferReport detect_pst(const SpectralData& sd, double time, double tol = kDefaultTransferTol,
                          Site source = {0, 0}, std::optional<Site> target = std::nullopt);

/// FR onto `edge` iff the probability on the edge is >= 1 - tol with at
/// least two edge sites carrying >= tol. Concentration on one edge site is
/// reported as PST (site != source) or Revival (site == source).
TransferReport detect_fr(const SpectralData& sd, Site source, double time, const std::vector<Site>& edge,
                         double tol = kDefaultTransferTol);

struct ScanPoint {
  double t = 0.0;
  std::vector<double> probabilities;
  double edge_sum = 0.0;
  /// Probabilities at (0,0), (N,0) and (0,N).
  double origin = 0.0;
  double far_corner = 0.0;
  double apex = 0.0;
  /// Strict-left local maximum of the (N,0) probability on the grid.
  bool corner_max = false;
  /// Strict-left local maximum of the edge sum on the grid.
  bool edge_max = false;
};

/// Uniform grid t_k = k t_max / (steps - 1); a single point when t_max == 0.
/// Throws std::invalid_argument for steps < 2 or t_max < 0.
std::vector<ScanPoint> scan_times(const SpectralData& sd, Site source, double t_max, int steps,
                                  const std::vector<Site>& edge);

/// Refines every flagged grid maximum by golden-section search and keeps
/// the ones that certify PST to (N,0) or FR / Revival on `edge`.
std::vector<TransferReport> find_events(const SpectralData& sd, Site source, const std::vector<ScanPoint>& scan,
                                        const std::vector<Site>& edge, double tol = kDefaultTransferTol);

}  // namespace ohwalk
