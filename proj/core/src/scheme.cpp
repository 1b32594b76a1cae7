#include "ohwalk/scheme.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ohwalk {

namespace {

constexpr std::uint64_t kFirstBits = 0x5555'5555'5555'5555ULL;
constexpr std::uint64_t kSecondBits = 0xAAAA'AAAA'AAAA'AAAAULL;

std::uint64_t block_mask(int n_blocks) {
  return n_blocks >= kMaxBlocks ? ~0ULL : (1ULL << (2 * n_blocks)) - 1;
}

void require_blocks(int n) {
  if (n < 0 || n > kMaxBlocks) {
    throw std::invalid_argument("block count must lie in [0, " + std::to_string(kMaxBlocks) +
                                "], got " + std::to_string(n));
  }
}

void require_guard(const char* what, int n, int guard) {
  require_blocks(n);
  if (n > guard) throw GuardExceeded(what, n, guard);
  if (n > kHardEnumerationLimit) throw GuardExceeded(what, n, kHardEnumerationLimit);
}

// Appends every difference vector with e1 blocks "10" and e2 blocks in
// {"01", "11"} over blocks [k, n).
void enumerate_differences(int k, int n, int e1, int e2, std::uint64_t prefix,
                           std::vector<std::uint64_t>& out) {
  if (k == n) {
    out.push_back(prefix);
    return;
  }
  const int remaining = n - k;
  if (e1 + e2 < remaining) enumerate_differences(k + 1, n, e1, e2, prefix, out);
  if (e1 > 0) enumerate_differences(k + 1, n, e1 - 1, e2, prefix | (1ULL << (2 * k)), out);
  if (e2 > 0) {
    enumerate_differences(k + 1, n, e1, e2 - 1, prefix | (2ULL << (2 * k)), out);
    enumerate_differences(k + 1, n, e1, e2 - 1, prefix | (3ULL << (2 * k)), out);
  }
}

// Vertex with e1 leading "10" blocks followed by e2 "01" blocks.
std::uint64_t canonical_representative(Shape s) {
  std::uint64_t bits = 0;
  for (int k = 0; k < s.e1; ++k) bits |= 1ULL << (2 * k);
  for (int k = s.e1; k < s.e1 + s.e2; ++k) bits |= 2ULL << (2 * k);
  return bits;
}

}  // namespace

std::string to_string(Shape s) { return "(" + std::to_string(s.e1) + "," + std::to_string(s.e2) + ")"; }

OhVector::OhVector(int n_blocks, std::uint64_t bits) : n_blocks_(n_blocks), bits_(bits) {
  require_blocks(n_blocks);
  if ((bits & ~block_mask(n_blocks)) != 0) {
    throw std::invalid_argument("bits set beyond block " + std::to_string(n_blocks));
  }
}

OhVector OhVector::parse(const std::string& text) {
  std::uint64_t bits = 0;
  int k = 0;
  std::istringstream in(text);
  std::string block;
  while (std::getline(in, block, ',')) {
    block.erase(std::remove(block.begin(), block.end(), ' '), block.end());
    if (block.size() != 2 || (block[0] != '0' && block[0] != '1') || (block[1] != '0' && block[1] != '1')) {
      throw std::invalid_argument("malformed block '" + block + "' in '" + text + "'");
    }
    if (k >= kMaxBlocks) throw std::invalid_argument("too many blocks in '" + text + "'");
    if (block[0] == '1') bits |= 1ULL << (2 * k);
    if (block[1] == '1') bits |= 2ULL << (2 * k);
    ++k;
  }
  return {k, bits};
}

OhVector OhVector::operator^(const OhVector& other) const {
  if (other.n_blocks_ != n_blocks_) throw std::invalid_argument("block count mismatch in vector addition");
  return {n_blocks_, bits_ ^ other.bits_};
}

std::string OhVector::to_string() const {
  std::string out;
  for (int k = 0; k < n_blocks_; ++k) {
    if (k) out += ',';
    out += (block(k) & 1U) ? '1' : '0';
    out += (block(k) & 2U) ? '1' : '0';
  }
  return out;
}

Shape shape_of_bits(std::uint64_t bits) {
  const std::uint64_t second = bits & kSecondBits;
  const std::uint64_t first_only = bits & kFirstBits & ~(second >> 1);
  return {std::popcount(first_only), std::popcount(second)};
}

Shape shape_of(const OhVector& x) { return shape_of_bits(x.bits()); }

std::uint64_t trinomial(int n, int i, int j) {
  if (!valid_shape(n, {i, j})) {
    throw std::out_of_range("trinomial index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside triangle of side " + std::to_string(n));
  }
  // C(n, i) * C(n - i, j); each partial product C(top - k + m, m) is an integer.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto binom = [&](int top, int k) {
    std::uint64_t r = 1;
    for (int m = 1; m <= k; ++m) {
      const auto factor = static_cast<std::uint64_t>(top - k + m);
      if (r > kMax / factor) throw std::overflow_error("trinomial overflows 64 bits");
      r = r * factor / static_cast<std::uint64_t>(m);
    }
    return r;
  };
  const std::uint64_t left = binom(n, i), right = binom(n - i, j);
  if (right != 0 && left > kMax / right) throw std::overflow_error("trinomial overflows 64 bits");
  return left * right;
}

std::uint64_t column_size(int n, int i, int j) {
  const std::uint64_t multinomial = trinomial(n, i, j);
  if (j >= 64 || multinomial > (std::numeric_limits<std::uint64_t>::max() >> j)) {
    throw std::overflow_error("column size overflows 64 bits");
  }
  return multinomial << j;
}

SchemeGraph::SchemeGraph(int n, Shape shape) : n_(n), shape_(shape) {
  require_blocks(n);
  if (!valid_shape(n, shape)) {
    throw std::invalid_argument("shape " + to_string(shape) + " invalid for N=" + std::to_string(n));
  }
  differences_.reserve(column_size(n, shape.e1, shape.e2));
  enumerate_differences(0, n, shape.e1, shape.e2, 0, differences_);
  std::sort(differences_.begin(), differences_.end());
}

std::vector<OhVector> SchemeGraph::neighbors(const OhVector& x) const {
  if (x.size() != n_) throw std::invalid_argument("vector has " + std::to_string(x.size()) + " blocks, graph has N=" + std::to_string(n_));
  std::vector<std::uint64_t> codes;
  codes.reserve(differences_.size());
  for (auto d : differences_) codes.push_back(x.bits() ^ d);
  std::sort(codes.begin(), codes.end());
  std::vector<OhVector> out;
  out.reserve(codes.size());
  for (auto c : codes) out.emplace_back(n_, c);
  return out;
}

std::vector<OhVector> neighbors(const OhVector& x, Shape s, int n) { return SchemeGraph(n, s).neighbors(x); }

IntersectionTable::IntersectionTable(int n)
    : n_(n), shapes_(site_count(n)), counts_(shapes_ * shapes_ * shapes_, 0) {}

std::size_t IntersectionTable::offset(Shape e, Shape f, Shape g) const {
  return (site_index(n_, as_site(e)) * shapes_ + site_index(n_, as_site(f))) * shapes_ +
         site_index(n_, as_site(g));
}

std::uint64_t IntersectionTable::count(Shape e, Shape f, Shape g) const { return counts_[offset(e, f, g)]; }

void IntersectionTable::set(Shape e, Shape f, Shape g, std::uint64_t value) { counts_[offset(e, f, g)] = value; }

std::uint64_t expected_coefficient_10(int n, Shape f, Shape g) {
  const int i = f.e1, j = f.e2;
  if (g == Shape{i - 1, j}) return static_cast<std::uint64_t>(n + 1 - i - j);
  if (g == Shape{i, j}) return static_cast<std::uint64_t>(j);
  if (g == Shape{i + 1, j}) return static_cast<std::uint64_t>(i + 1);
  return 0;
}

std::uint64_t expected_coefficient_01(int n, Shape f, Shape g) {
  const int i = f.e1, j = f.e2;
  if (g == Shape{i, j - 1}) return 2 * static_cast<std::uint64_t>(n + 1 - i - j);
  if (g == Shape{i + 1, j - 1}) return 2 * static_cast<std::uint64_t>(i + 1);
  if (g == Shape{i - 1, j + 1}) return static_cast<std::uint64_t>(j + 1);
  if (g == Shape{i, j + 1}) return static_cast<std::uint64_t>(j + 1);
  return 0;
}

BoseMesnerResult verify_bose_mesner(int n, const EnumerationOptions& options) {
  require_guard("verify_bose_mesner", n, options.guard);

  const std::uint64_t vertices = 1ULL << (2 * n);
  const std::size_t shapes = site_count(n);
  std::vector<std::uint16_t> shape_index(vertices);
  std::vector<std::vector<std::uint64_t>> classes(shapes);
  for (std::uint64_t v = 0; v < vertices; ++v) {
    const auto idx = static_cast<std::uint16_t>(site_index(n, as_site(shape_of_bits(v))));
    shape_index[v] = idx;
    classes[idx].push_back(v);
  }

  // counts[e * shapes + f] for one (x, y) pair.
  std::vector<std::uint64_t> counts(shapes * shapes);
  auto count_pair = [&](std::uint64_t x, std::uint64_t y) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint64_t z = 0; z < vertices; ++z) ++counts[shape_index[x ^ z] * shapes + shape_index[z ^ y]];
  };

  BoseMesnerResult result{IntersectionTable(n), {}, 0};
  result.report.name = "bose-mesner N=" + std::to_string(n);
  const auto sites = all_sites(n);
  std::mt19937_64 rng(options.seed);

  for (std::size_t g = 0; g < shapes; ++g) {
    const Shape gs = as_shape(sites[g]);
    count_pair(canonical_representative(gs), 0);
    for (std::size_t e = 0; e < shapes; ++e) {
      for (std::size_t f = 0; f < shapes; ++f) {
        result.table.set(as_shape(sites[e]), as_shape(sites[f]), gs, counts[e * shapes + f]);
      }
    }
    const std::vector<std::uint64_t> reference = counts;

    auto check_representative = [&](std::uint64_t x, std::uint64_t y) {
      count_pair(x, y);
      ++result.representatives_checked;
      result.report.check(counts == reference, [&] {
        return "intersection counts for g=" + to_string(gs) + " depend on the representative pair x=" +
               OhVector(n, x).to_string() + " y=" + OhVector(n, y).to_string();
      });
    };

    const auto& members = classes[g];
    const auto samples = static_cast<std::uint64_t>(std::max(options.samples_per_shape, 0));
    if (vertices * members.size() <= samples) {
      for (std::uint64_t y = 0; y < vertices; ++y) {
        for (auto d : members) check_representative(y ^ d, y);
      }
    } else {
      std::uniform_int_distribution<std::uint64_t> pick_vertex(0, vertices - 1);
      std::uniform_int_distribution<std::size_t> pick_member(0, members.size() - 1);
      for (std::uint64_t s = 0; s < samples; ++s) {
        const std::uint64_t y = pick_vertex(rng);
        check_representative(y ^ members[pick_member(rng)], y);
      }
    }
  }

  const Shape a10{1, 0}, a01{0, 1};
  for (const auto f : sites) {
    for (const auto g : sites) {
      const Shape fs = as_shape(f), gs = as_shape(g);
      const auto got10 = n >= 1 ? result.table.count(a10, fs, gs) : 0;
      const auto want10 = expected_coefficient_10(n, fs, gs);
      result.report.record(got10 == want10, "A(1,0)A" + to_string(fs) + " coefficient on A" + to_string(gs) +
                                                ": counted " + std::to_string(got10) + ", expected " +
                                                std::to_string(want10));
      const auto got01 = n >= 1 ? result.table.count(a01, fs, gs) : 0;
      const auto want01 = expected_coefficient_01(n, fs, gs);
      result.report.record(got01 == want01, "A(0,1)A" + to_string(fs) + " coefficient on A" + to_string(gs) +
                                                ": counted " + std::to_string(got01) + ", expected " +
                                                std::to_string(want01));
    }
  }
  return result;
}

CheckReport check_scheme_properties(int n, const EnumerationOptions& options,
                                    std::uint64_t max_exhaustive_vertices) {
  require_guard("check_scheme_properties", n, options.guard);
  CheckReport report;
  report.name = "scheme properties N=" + std::to_string(n);

  const std::uint64_t vertices = 1ULL << (2 * n);
  std::vector<SchemeGraph> graphs;
  for (const auto s : all_sites(n)) graphs.emplace_back(n, as_shape(s));

  std::vector<std::uint64_t> probes;
  const bool exhaustive = vertices <= max_exhaustive_vertices;
  if (exhaustive) {
    for (std::uint64_t v = 0; v < vertices; ++v) probes.push_back(v);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, vertices - 1);
    for (int k = 0; k < options.samples_per_shape; ++k) probes.push_back(pick(rng));
  }
  // Symmetry is checked against every neighbor when exhaustive, otherwise a prefix.
  const std::size_t symmetry_checks = exhaustive ? std::numeric_limits<std::size_t>::max() : 16;

  for (const auto v : probes) {
    const OhVector x(n, v);
    std::vector<std::uint64_t> cover;
    cover.reserve(vertices);
    for (const auto& graph : graphs) {
      const auto nbrs = graph.neighbors(x);
      const auto k = column_size(n, graph.shape().e1, graph.shape().e2);
      report.check(nbrs.size() == k, [&] {
        return "vertex " + x.to_string() + " has " + std::to_string(nbrs.size()) + " neighbors in G" +
               to_string(graph.shape()) + ", expected " + std::to_string(k);
      });
      if (graph.shape() == Shape{0, 0}) {
        report.record(nbrs.size() == 1 && nbrs.front() == x, "class (0,0) is not the identity at " + x.to_string());
      }
      for (std::size_t m = 0; m < nbrs.size() && m < symmetry_checks; ++m) {
        const auto back = graph.neighbors(nbrs[m]);
        report.check(std::binary_search(back.begin(), back.end(), x),
                     [&] { return "asymmetric edge " + x.to_string() + " -> " + nbrs[m].to_string(); });
      }
      for (const auto& y : nbrs) cover.push_back(y.bits());
    }
    std::sort(cover.begin(), cover.end());
    bool partition = cover.size() == vertices;
    for (std::uint64_t m = 0; partition && m < vertices; ++m) partition = cover[m] == m;
    report.record(partition, "classes do not partition the neighborhood of " + x.to_string());
  }
  return report;
}

}  // namespace ohwalk
