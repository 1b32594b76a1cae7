#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ohwalk {

/// Raised when an exhaustive enumeration would exceed its configured size.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, int requested, int limit)
      : std::runtime_error(what + ": N=" + std::to_string(requested) + " exceeds the limit N<=" +
                           std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  int requested() const { return requested_; }
  int limit() const { return limit_; }

 private:
  int requested_;
  int limit_;
};

/// Outcome of a verification pass. Failures are recorded rather than thrown
/// so that a report can carry every violation it found (capped).
struct CheckReport {
  static constexpr std::size_t kMaxRecordedFailures = 32;

  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  double max_deviation = 0.0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& message = {}) {
    ++checks;
    if (ok) return;
    passed = false;
    ++failure_count;
    if (failures.size() < kMaxRecordedFailures) failures.push_back(message);
  }

  /// As record(), but builds the message only on failure.
  template <class MakeMessage>
  void check(bool ok, MakeMessage&& make_message) {
    if (ok) {
      record(true);
    } else {
      record(false, make_message());
    }
  }

  /// Records a numeric comparison |deviation| <= tol.
  void record_deviation(double deviation, double tol, const std::string& message = {}) {
    max_deviation = std::max(max_deviation, deviation);
    record(deviation <= tol, message);
  }

  /// Folds another report's counts and failures into this one.
  void merge(const CheckReport& other) {
    checks += other.checks;
    failure_count += other.failure_count;
    passed = passed && other.passed;
    max_deviation = std::max(max_deviation, other.max_deviation);
    for (const auto& f : other.failures) {
      if (failures.size() >= kMaxRecordedFailures) break;
      failures.push_back(f);
    }
  }
};

}  // namespace ohwalk
