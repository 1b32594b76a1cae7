#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ohwalk/report.hpp"

namespace ohwalk::cli {

inline constexpr double kProjectionTol = 1e-12;
inline constexpr double kRecurrenceTol = 1e-10;
inline constexpr double kGeneratingTol = 1e-9;
inline constexpr double kOrthogonalityTol = 1e-10;
inline constexpr double kEigenResidualTol = 1e-9;
inline constexpr double kEquivalenceTol = 1e-9;
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr int kGeneratingSamples = 20;
/// Above this N the recurrence residuals are scaled by the term magnitudes;
/// unnormalized polynomial values outgrow an absolute 1e-10 in double.
inline constexpr int kAbsoluteRecurrenceLimit = 8;

/// Each suite throws GuardExceeded when N is above its limit; a guard
/// override replaces that limit, subject to the hard limits of the core.
std::vector<CheckReport> suite_scheme(int n, std::optional<int> guard);
std::vector<CheckReport> suite_projection(int n, double alpha, double beta, std::optional<int> guard);
std::vector<CheckReport> suite_polynomials(int n, double alpha, double beta, std::optional<int> guard);
std::vector<CheckReport> suite_dynamics(int n, double alpha, double beta, std::optional<int> guard);

/// "scheme", "projection", "polynomials", "dynamics" or "all" in that order.
std::vector<std::string> expand_suite(const std::string& suite);

}  // namespace ohwalk::cli
