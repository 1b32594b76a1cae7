#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ohwalk/lattice.hpp"

namespace ohwalk::cli {

/// Process exit codes of every subcommand.
enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsageError = 2 };

struct VerifyOptions {
  int n = 3;
  double alpha = 1.0;
  double beta = 2.0;
  /// scheme | projection | polynomials | dynamics | all
  std::string suite = "all";
  /// Replaces every per-suite size limit when set.
  std::optional<int> guard_override;
  /// JSON report destination; nothing is written when empty.
  std::string out;
};

struct SimulateOptions {
  int n = 7;
  double alpha = 1.0;
  double beta = 2.0;
  Site source{0, 0};
  std::vector<double> times{0.0};
  /// json | csv
  std::string format = "json";
  /// Output directory, one file per snapshot. Empty: JSON array on stdout.
  std::string out;
};

struct ScanOptions {
  int n = 7;
  /// Exact alpha/beta = a/b; sets alpha = a, beta = b.
  std::optional<std::pair<std::int64_t, std::int64_t>> ratio;
  double alpha = 1.0;
  double beta = 2.0;
  Site source{0, 0};
  double t_max = 3.141592653589793;
  int steps = 4000;
  double tol = 1e-9;
  /// Event list destination; stdout when empty.
  std::string out;
  /// Optional CSV trace t,edge_sum,origin,far_corner,apex.
  std::string trace;
};

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ohwalk::cli
