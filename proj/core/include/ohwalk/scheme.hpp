#pragma once

// Ordered Hamming scheme of depth 2 on Q^(N,2), Q = Z/2Z.
//
// A vertex is N blocks of two bits. Block k occupies bits (2k, 2k+1) of a
// 64-bit word: the first bit of the block sits at 2k, the second at 2k+1.
// Group addition is XOR, so x - y == x + y == x ^ y.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ohwalk/lattice.hpp"
#include "ohwalk/report.hpp"

namespace ohwalk {

inline constexpr int kMaxBlocks = 32;
inline constexpr int kDefaultEnumerationGuard = 8;
/// Largest N any vertex-level enumeration accepts, whatever the guard says.
inline constexpr int kHardEnumerationLimit = 12;

struct Shape {
  int e1 = 0;
  int e2 = 0;

  friend constexpr auto operator<=>(const Shape&, const Shape&) = default;
};

constexpr bool valid_shape(int n, Shape s) { return s.e1 >= 0 && s.e2 >= 0 && s.e1 + s.e2 <= n; }
constexpr Site as_site(Shape s) { return {s.e1, s.e2}; }
constexpr Shape as_shape(Site s) { return {s.i, s.j}; }
std::string to_string(Shape s);

class OhVector {
 public:
  OhVector(int n_blocks, std::uint64_t bits);

  static OhVector zero(int n_blocks) { return {n_blocks, 0}; }

  /// Parses comma separated two-character blocks, e.g. "00,10,11,00,01".
  /// The first character of a block is its first bit.
  static OhVector parse(const std::string& text);

  int size() const { return n_blocks_; }
  std::uint64_t bits() const { return bits_; }

  /// Block k as a two-bit value: bit 0 is the first bit, bit 1 the second.
  unsigned block(int k) const { return static_cast<unsigned>((bits_ >> (2 * k)) & 3U); }

  OhVector operator^(const OhVector& other) const;
  OhVector operator-(const OhVector& other) const { return *this ^ other; }
  OhVector operator+(const OhVector& other) const { return *this ^ other; }

  friend bool operator==(const OhVector&, const OhVector&) = default;
  friend auto operator<=>(const OhVector& a, const OhVector& b) { return a.bits_ <=> b.bits_; }

  std::string to_string() const;

 private:
  int n_blocks_;
  std::uint64_t bits_;
};

/// Shape of a raw 2N-bit code (no range checks).
Shape shape_of_bits(std::uint64_t bits);

/// e1 counts blocks equal to "10"; e2 counts blocks whose second bit is set.
Shape shape_of(const OhVector& x);

/// k_{i,j} = N! / (i! j! (N-i-j)!) * 2^j, the size of the class of shape (i,j).
/// Throws std::out_of_range outside the triangle, std::overflow_error past 64 bits.
std::uint64_t column_size(int n, int i, int j);

/// Multinomial N! / (i! j! (N-i-j)!).
std::uint64_t trinomial(int n, int i, int j);

/// The graph G_s: x ~ y iff shape_of(x ^ y) == s. Neighbor lists are
/// produced on demand from a precomputed list of difference vectors.
class SchemeGraph {
 public:
  SchemeGraph(int n, Shape shape);

  int n() const { return n_; }
  Shape shape() const { return shape_; }
  std::uint64_t degree() const { return differences_.size(); }

  /// Difference vectors d with shape_of(d) == shape, ascending.
  const std::vector<std::uint64_t>& differences() const { return differences_; }

  /// Neighbors of x in ascending integer encoding.
  std::vector<OhVector> neighbors(const OhVector& x) const;

 private:
  int n_;
  Shape shape_;
  std::vector<std::uint64_t> differences_;
};

/// All y with shape_of(x ^ y) == s, ascending. Throws std::invalid_argument
/// for a shape outside the triangle or a block-count mismatch.
std::vector<OhVector> neighbors(const OhVector& x, Shape s, int n);

/// Intersection numbers alpha_{e,f}^{g}: the number of z with
/// shape(x ^ z) == e and shape(z ^ y) == f for any pair with shape(x ^ y) == g.
class IntersectionTable {
 public:
  explicit IntersectionTable(int n);

  int n() const { return n_; }
  std::uint64_t count(Shape e, Shape f, Shape g) const;
  void set(Shape e, Shape f, Shape g, std::uint64_t value);

  friend bool operator==(const IntersectionTable&, const IntersectionTable&) = default;

 private:
  std::size_t offset(Shape e, Shape f, Shape g) const;

  int n_;
  std::size_t shapes_;
  std::vector<std::uint64_t> counts_;
};

struct BoseMesnerResult {
  IntersectionTable table;
  /// Coefficient checks of A_(1,0) A_(i,j) and A_(0,1) A_(i,j) against the
  /// closed forms, plus representative independence of every count.
  CheckReport report;
  std::size_t representatives_checked = 0;
};

struct EnumerationOptions {
  int guard = kDefaultEnumerationGuard;
  int samples_per_shape = 50;
  std::uint64_t seed = 0x5eed'0b5eULL;
};

/// Builds the full intersection table by counting z over all 4^N vertices,
/// then checks the A_(1,0) and A_(0,1) multiplication rules entrywise.
/// Throws GuardExceeded when N > options.guard.
BoseMesnerResult verify_bose_mesner(int n, const EnumerationOptions& options = {});

/// Closed-form coefficient of A_g in A_(1,0) A_f.
std::uint64_t expected_coefficient_10(int n, Shape f, Shape g);
/// Closed-form coefficient of A_g in A_(0,1) A_f.
std::uint64_t expected_coefficient_01(int n, Shape f, Shape g);

/// Neighbor symmetry, regularity and edge partition of the scheme graphs.
/// Exhaustive over vertices when 4^N <= max_exhaustive_vertices, otherwise
/// over `options.samples_per_shape` random vertices.
CheckReport check_scheme_properties(int n, const EnumerationOptions& options = {},
                                    std::uint64_t max_exhaustive_vertices = 256);

}  // namespace ohwalk
