#include "ohwalk/transfer.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ohwalk {

std::string to_string(TransferKind kind) {
  switch (kind) {
    case TransferKind::PST: return "PST";
    case TransferKind::FR: return "FR";
    case TransferKind::Revival: return "revival";
    case TransferKind::None: break;
  }
  return "none";
}

std::string to_string(ParityTag tag) {
  switch (tag) {
    case ParityTag::EvenOdd: return "even/odd";
    case ParityTag::OddEven: return "odd/even";
    case ParityTag::Other: break;
  }
  return "other";
}

RatioClass classify_ratio(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::invalid_argument("ratio denominator must be positive, got " + std::to_string(b));
  if (a < 0) throw std::invalid_argument("ratio numerator must be non-negative, got " + std::to_string(a));
  const std::int64_t g = std::gcd(a, b);
  RatioClass rc;
  rc.a = a / g;
  rc.b = b / g;
  const bool a_even = rc.a % 2 == 0, b_even = rc.b % 2 == 0;
  rc.tag = a_even && !b_even ? ParityTag::EvenOdd : (!a_even && b_even ? ParityTag::OddEven : ParityTag::Other);

  // With alpha = a, beta = b both 2aT/pi and 2bT/pi must be integers, and
  // gcd(a, b) = 1 forces T = k pi / 2. Parities of (ak, bk) repeat with
  // period 2 in k, so k in {1, 2} decides the question.
  for (std::int64_t k = 1; k <= 2 && !rc.pst_predicted; ++k) {
    const bool alpha_odd = (rc.a * k) % 2 == 1, beta_odd = (rc.b * k) % 2 == 1;
    if (alpha_odd && !beta_odd) {
      rc.family = PstFamily::OddAlpha;
    } else if (!alpha_odd && beta_odd) {
      rc.family = PstFamily::OddBeta;
    } else {
      continue;
    }
    rc.pst_predicted = true;
    rc.predicted_time = static_cast<double>(k) * std::numbers::pi / 2.0;
  }
  return rc;
}

std::optional<double> predicted_pst_time(const RatioClass& ratio, double beta) {
  if (!ratio.predicted_time) return std::nullopt;
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive to scale the predicted time");
  return *ratio.predicted_time * static_cast<double>(ratio.b) / beta;
}

double probability_period(const RatioClass& ratio, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  return std::numbers::pi * static_cast<double>(ratio.b) / beta;
}

std::vector<Site> bottom_edge(int n) {
  std::vector<Site> edge;
  for (int i = 0; i <= n; ++i) edge.push_back({i, 0});
  return edge;
}

namespace {

TransferReport base_report(const SpectralData& sd, Site source, double time) {
  TransferReport r;
  r.source = source;
  r.time = time;
  r.n = sd.n;
  r.alpha = sd.alpha;
  r.beta = sd.beta;
  return r;
}

double edge_probability(const AmplitudeField& field, const std::vector<Site>& edge) {
  double total = 0.0;
  for (const Site s : edge) total += field.probability(s);
  return total;
}

// Golden-section maximization of f on [lo, hi].
double refine_maximum(const std::function<double(double)>& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int iter = 0; iter < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++iter) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

}  // namespace

TransferReport detect_pst(const SpectralData& sd, double time, double tol, Site source, std::optional<Site> target) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const Site dst = target.value_or(Site{sd.n, 0});
  TransferReport r = base_report(sd, source, time);
  r.targets = {dst};
  r.fidelity = std::norm(amplitude_spectral(sd, source, dst, time));
  if (r.fidelity >= 1.0 - tol) r.kind = TransferKind::PST;
  return r;
}

TransferReport detect_fr(const SpectralData& sd, Site source, double time, const std::vector<Site>& edge, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const AmplitudeField field = field_spectral(sd, source, time);
  TransferReport r = base_report(sd, source, time);
  r.targets = edge;
  r.fidelity = edge_probability(field, edge);
  if (r.fidelity < 1.0 - tol) return r;

  std::vector<Site> occupied;
  for (const Site s : edge) {
    if (field.probability(s) >= tol) occupied.push_back(s);
  }
  if (occupied.size() >= 2) {
    r.kind = TransferKind::FR;
  } else if (occupied.size() == 1) {
    r.kind = occupied.front() == source ? TransferKind::Revival : TransferKind::PST;
    r.targets = occupied;
    r.fidelity = field.probability(occupied.front());
  }
  return r;
}

std::vector<ScanPoint> scan_times(const SpectralData& sd, Site source, double t_max, int steps,
                                  const std::vector<Site>& edge) {
  if (steps < 2) throw std::invalid_argument("scan needs at least 2 steps");
  if (!(t_max >= 0.0)) throw std::invalid_argument("scan needs t_max >= 0");
  const int points = t_max == 0.0 ? 1 : steps;

  std::vector<ScanPoint> trace(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    ScanPoint& pt = trace[static_cast<std::size_t>(k)];
    pt.t = points == 1 ? 0.0 : t_max * k / (points - 1);
    const AmplitudeField field = field_spectral(sd, source, pt.t);
    pt.probabilities.reserve(field.amplitudes.size());
    for (const auto& a : field.amplitudes) pt.probabilities.push_back(std::norm(a));
    pt.edge_sum = edge_probability(field, edge);
    pt.origin = field.probability({0, 0});
    pt.far_corner = field.probability({sd.n, 0});
    pt.apex = field.probability({0, sd.n});
  }
  for (std::size_t k = 1; k + 1 < trace.size(); ++k) {
    trace[k].corner_max = trace[k].far_corner > trace[k - 1].far_corner && trace[k].far_corner >= trace[k + 1].far_corner;
    trace[k].edge_max = trace[k].edge_sum > trace[k - 1].edge_sum && trace[k].edge_sum >= trace[k + 1].edge_sum;
  }
  return trace;
}

std::vector<TransferReport> find_events(const SpectralData& sd, Site source, const std::vector<ScanPoint>& scan,
                                        const std::vector<Site>& edge, double tol) {
  std::vector<TransferReport> events;
  const Site corner{sd.n, 0};
  auto corner_probability = [&](double t) { return std::norm(amplitude_spectral(sd, source, corner, t)); };
  auto edge_sum = [&](double t) { return edge_probability(field_spectral(sd, source, t), edge); };

  for (std::size_t k = 1; k + 1 < scan.size(); ++k) {
    const double lo = scan[k - 1].t, hi = scan[k + 1].t;
    if (scan[k].corner_max) {
      const double t = refine_maximum(corner_probability, lo, hi);
      auto report = detect_pst(sd, t, tol, source, corner);
      if (report.kind == TransferKind::PST) events.push_back(std::move(report));
    }
    if (scan[k].edge_max) {
      const double t = refine_maximum(edge_sum, lo, hi);
      auto report = detect_fr(sd, source, t, edge, tol);
      // Single-site concentration on the far corner is already reported above.
      const bool duplicate_pst = report.kind == TransferKind::PST && report.targets.front() == corner;
      if (report.kind != TransferKind::None && !duplicate_pst) events.push_back(std::move(report));
    }
  }
  return events;
}

}  // namespace ohwalk
