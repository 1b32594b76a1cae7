#include "ohwalk/projection.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace ohwalk {

double ColumnBasis::normalization(Site s) const { return 1.0 / std::sqrt(static_cast<double>(column(s).size())); }

ColumnBasis build_columns(int n, int guard) {
  if (n < 0 || n > kMaxBlocks) throw std::invalid_argument("N out of range: " + std::to_string(n));
  if (n > guard) throw GuardExceeded("build_columns", n, guard);
  if (n > kHardEnumerationLimit) throw GuardExceeded("build_columns", n, kHardEnumerationLimit);
  ColumnBasis cb;
  cb.n = n;
  cb.members.resize(site_count(n));
  const std::uint64_t vertices = 1ULL << (2 * n);
  for (std::uint64_t v = 0; v < vertices; ++v) {
    cb.members[site_index(n, as_site(shape_of_bits(v)))].push_back(v);
  }
  return cb;
}

namespace {

// counts(a, b) = number of (u, v) with u in column a, v in column b, u ~ v.
Eigen::MatrixXd cross_edge_counts(const ColumnBasis& cb, const SchemeGraph& graph) {
  const auto dim = static_cast<Eigen::Index>(site_count(cb.n));
  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (const auto v : cb.members[static_cast<std::size_t>(b)]) {
      for (const auto d : graph.differences()) {
        const auto a = static_cast<Eigen::Index>(site_index(cb.n, as_site(shape_of_bits(v ^ d))));
        counts(a, b) += 1.0;
      }
    }
  }
  return counts;
}

Eigen::MatrixXd scale_counts(const ColumnBasis& cb, const Eigen::MatrixXd& counts) {
  Eigen::MatrixXd out = counts;
  for (Eigen::Index a = 0; a < out.rows(); ++a) {
    const double ka = static_cast<double>(cb.members[static_cast<std::size_t>(a)].size());
    for (Eigen::Index b = 0; b < out.cols(); ++b) {
      const double kb = static_cast<double>(cb.members[static_cast<std::size_t>(b)].size());
      out(a, b) = counts(a, b) / std::sqrt(ka * kb);
    }
  }
  return out;
}

}  // namespace

ProjectedOperator project_walk(const ColumnBasis& cb, double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) throw std::invalid_argument("project_walk requires alpha, beta >= 0");
  if (cb.n < 1) throw std::invalid_argument("project_walk requires N >= 1");
  ProjectedOperator op;
  op.n = cb.n;
  op.alpha = alpha;
  op.beta = beta;
  // Integer counts are exact in double for every N the guard admits.
  op.part_10 = scale_counts(cb, cross_edge_counts(cb, SchemeGraph(cb.n, {1, 0})));
  op.part_01 = scale_counts(cb, cross_edge_counts(cb, SchemeGraph(cb.n, {0, 1})));
  op.entries = alpha * op.part_10 + beta * op.part_01;
  return op;
}

CheckReport check_column_invariance(const ColumnBasis& cb) {
  CheckReport report;
  report.name = "column invariance N=" + std::to_string(cb.n);
  const int n = cb.n;
  if (n < 1) return report;

  const SchemeGraph g10(n, {1, 0});
  const SchemeGraph g01(n, {0, 1});

  for (const Site s : all_sites(n)) {
    const int i = s.i, j = s.j;
    const std::map<Site, int> want10 = {{{i + 1, j}, n - i - j}, {{i, j}, j}, {{i - 1, j}, i}};
    const std::map<Site, int> want01 = {
        {{i, j + 1}, 2 * (n - i - j)}, {{i + 1, j - 1}, j}, {{i - 1, j + 1}, 2 * i}, {{i, j - 1}, j}};

    auto check = [&](const SchemeGraph& graph, const std::map<Site, int>& want, const char* relation,
                     std::uint64_t v) {
      std::map<Site, int> got;
      for (const auto d : graph.differences()) ++got[as_site(shape_of_bits(v ^ d))];
      for (const auto& [target, count] : want) {
        const int have = got.count(target) ? got.at(target) : 0;
        // Out-of-triangle targets must have a zero expected count.
        if (!in_triangle(n, target)) {
          report.record(count == 0 && have == 0, std::string("nonzero count to out-of-range column ") +
                                                      to_string(target) + " under " + relation);
          continue;
        }
        report.check(have == count, [&] {
          return "vertex " + OhVector(n, v).to_string() + " in V" + to_string(s) + " has " + std::to_string(have) +
                 " neighbors in V" + to_string(target) + " under " + relation + ", expected " + std::to_string(count);
        });
      }
      for (const auto& [target, have] : got) {
        report.check(want.count(target) > 0, [&] {
          return "vertex " + OhVector(n, v).to_string() + " has " + std::to_string(have) +
                 " unexpected neighbors in V" + to_string(target) + " under " + relation;
        });
      }
    };

    for (const auto v : cb.column(s)) {
      check(g10, want10, "(1,0)", v);
      check(g01, want01, "(0,1)", v);
    }
  }
  return report;
}

}  // namespace ohwalk
