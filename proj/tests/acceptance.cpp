// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ohwalk/dynamics.hpp"
#include "ohwalk/krawtchouk.hpp"
#include "ohwalk/projection.hpp"
#include "ohwalk/scheme.hpp"
#include "ohwalk/transfer.hpp"

namespace {

using namespace ohwalk;
using std::numbers::pi;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, pattern, a, b, c);
  return buffer;
}

Outcome corner_transfer(double alpha, double beta) {
  const auto start = Clock::now();
  const int n = 7;
  const auto field = field_spectral(build_spectral(n, alpha, beta), {0, 0}, pi / 2);
  const double elapsed = seconds_since(start);
  const double corner = field.probability({n, 0});
  double others = 0.0;
  for (const Site s : all_sites(n)) {
    if (s != Site{n, 0}) others = std::max(others, field.probability(s));
  }
  return {std::abs(corner - 1.0) <= 1e-9 && others < 1e-9 && elapsed < 1.0,
          fmt("|f(7,0)|^2-1 = %.2e, max other = %.2e, %.3f s", corner - 1.0, others, elapsed)};
}

Outcome c1() { return corner_transfer(1.0, 2.0); }
Outcome c2() { return corner_transfer(2.0, 1.0); }

Outcome c3() {
  const int n = 7;
  const auto field = field_spectral(build_spectral(n, 1.0, 2.0), {0, 0}, pi / 4);
  double sum = 0.0;
  int occupied = 0;
  for (const Site s : bottom_edge(n)) {
    sum += field.probability(s);
    occupied += field.probability(s) > 1e-3;
  }
  return {std::abs(sum - 1.0) <= 1e-9 && occupied >= 2,
          fmt("edge sum - 1 = %.2e, sites above 1e-3: %.0f", sum - 1.0, occupied)};
}

Outcome c4() {
  const int n = 7;
  const auto field = field_spectral(build_spectral(n, std::numbers::sqrt2, 1.0), {0, n}, pi / 4);
  double sum = 0.0;
  for (const Site s : bottom_edge(n)) sum += field.probability(s);
  return {std::abs(sum - 1.0) <= 1e-9, fmt("edge sum - 1 = %.2e", sum - 1.0)};
}

Outcome c5() {
  Outcome out;
  const auto t = predicted_pst_time(classify_ratio(0, 1), 1.0);
  if (!t) return {false, "no predicted time"};
  double worst = 0.0;
  for (const int n : {2, 3, 5}) {
    const auto report = detect_pst(build_spectral(n, 0.0, 1.0), *t);
    worst = std::max(worst, std::abs(report.fidelity - 1.0));
    out.passed = out.passed && report.kind == TransferKind::PST && std::abs(report.fidelity - 1.0) <= 1e-9;
  }
  out.detail = fmt("T = %.12f, max |fidelity - 1| = %.2e", *t, worst);
  return out;
}

Outcome c6() {
  Outcome out;
  double at_four = 0.0;
  std::size_t checks = 0;
  for (const int n : {2, 3, 4}) {
    const auto start = Clock::now();
    const auto result = verify_bose_mesner(n);
    if (n == 4) at_four = seconds_since(start);
    checks += result.report.checks;
    out.passed = out.passed && result.report.passed;
  }
  out.passed = out.passed && at_four < 30.0;
  out.detail = fmt("%.0f integer checks, N=4 in %.3f s", double(checks), at_four);
  return out;
}

Outcome c7() {
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const auto cb = build_columns(n);
    for (const auto& [a, b] : {std::pair{1.0, 2.0}, std::pair{2.0, 1.0}, std::pair{std::numbers::sqrt2, 1.0}}) {
      const auto op = project_walk(cb, a, b);
      worst = std::max(worst, (op.entries - build_hamiltonian(n, a, b).matrix).cwiseAbs().maxCoeff());
    }
  }
  return {worst <= 1e-12, fmt("max entry deviation %.2e", worst)};
}

Outcome c8() {
  double ortho = 0.0, residual = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& [a, b] : {std::pair{1.0, 2.0}, std::pair{2.0, 1.0}, std::pair{std::numbers::sqrt2, 1.0}}) {
      const auto sd = build_spectral(n, a, b);
      ortho = std::max(ortho, orthogonality_defect(sd));
      residual = std::max(residual, eigen_residual(sd));
    }
  }
  return {ortho < 1e-10 && residual < 1e-9, fmt("max |U^T U - I| = %.2e, max |HU - U Lambda| = %.2e", ortho, residual)};
}

Outcome c9() {
  Outcome out;
  double recurrence = 0.0, generating = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (const PolyParams params : {PolyParams{n, 0.5, 0.25}, PolyParams{n, 1.0 / 3.0, 0.2}}) {
      const auto report = check_recurrences(params, 1.0, 2.0, 1e-10);
      recurrence = std::max(recurrence, report.max_deviation);
      out.passed = out.passed && report.passed;
    }
  }
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> unit(-1.5, 1.5);
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto report = check_generating_function(PolyParams{n, 0.5, 0.25}, unit(rng), unit(rng), 1e-9);
    generating = std::max(generating, report.max_deviation);
    out.passed = out.passed && report.passed;
  }
  out.detail = fmt("max recurrence residual %.2e, max generating-function error %.2e", recurrence, generating);
  return out;
}

Outcome c10() {
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [a, b] : {std::pair{1.0, 2.0}, std::pair{2.0, 1.0}, std::pair{std::numbers::sqrt2, 1.0}}) {
      const auto sd = build_spectral(n, a, b);
      const auto h = build_hamiltonian(n, a, b);
      for (const double t : {0.3, pi / 5, pi / 4, pi / 2, 1.7}) {
        const auto spectral = field_spectral(sd, {0, 0}, t);
        const auto oracle = amplitude_expm_oracle(h, {0, 0}, t);
        for (const Site s : all_sites(n)) {
          const Complex closed = amplitude_closed_form(n, a, b, s, t);
          worst = std::max({worst, std::abs(closed - spectral.at(s)), std::abs(closed - oracle.at(s)),
                            std::abs(spectral.at(s) - oracle.at(s))});
        }
      }
    }
  }
  return {worst < 1e-9, fmt("max amplitude deviation %.2e", worst)};
}

Outcome c11() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const double a = 3.0 * (1.0 - unit(rng)), b = 3.0 * (1.0 - unit(rng));  // (0, 3]
    const double t = 10.0 * unit(rng);
    const auto sites = all_sites(n);
    const Site source = sites[rng() % sites.size()];
    worst = std::max(worst, std::abs(field_spectral(build_spectral(n, a, b), source, t).norm_squared() - 1.0));
  }
  return {worst <= 1e-10, fmt("max |norm - 1| = %.2e over 1000 draws", worst)};
}

Outcome c12() {
  Outcome out;
  double best = 0.0;
  for (const auto& [a, b] : {std::pair{1, 1}, std::pair{1, 3}}) {
    const auto rc = classify_ratio(a, b);
    const double period = probability_period(rc, double(rc.b));
    const auto sd = build_spectral(5, double(rc.a), double(rc.b));
    for (const auto& pt : scan_times(sd, {0, 0}, 2.0 * period, 4000, bottom_edge(5))) best = std::max(best, pt.far_corner);
  }
  out.passed = best < 1.0 - 1e-6;
  out.detail = fmt("max corner fidelity on the grid %.6f", best);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1  PST N=7 alpha=1 beta=2 at pi/2", c1},
      {"2  PST N=7 alpha=2 beta=1 at pi/2", c2},
      {"3  FR N=7 alpha=1 beta=2 at pi/4 on j=0", c3},
      {"4  FR N=7 alpha=sqrt2 beta=1 from (0,7) at pi/4", c4},
      {"5  PST on the (0,1) graph, N in {2,3,5}", c5},
      {"6  Bose-Mesner coefficients by enumeration, N in {2,3,4}", c6},
      {"7  projection equals lattice Hamiltonian, N <= 5", c7},
      {"8  eigenvector orthogonality and eigen-residual, N <= 12", c8},
      {"9  recurrences (N <= 8) and generating function", c9},
      {"10 closed form vs spectral vs expm, N <= 6", c10},
      {"11 unitarity over 1000 random draws", c11},
      {"12 negative control (1,1), (1,3) at N=5", c12},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("%s  criterion %s  [%s]\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
