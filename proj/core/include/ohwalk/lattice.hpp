#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ohwalk {

/// A point (i, j) of the triangular lattice 0 <= i + j <= N.
///
/// The same triangle indexes three different things: lattice sites of the
/// 1-excitation Hamiltonian, shapes (e1, e2) of the scheme, and spectral
/// points (x, y). Sites are ordered by anti-diagonal i + j, then by i.
struct Site {
  int i = 0;
  int j = 0;

  friend constexpr auto operator<=>(const Site&, const Site&) = default;
};

/// Number of sites in the triangle of side N: (N + 1)(N + 2) / 2.
constexpr std::size_t site_count(int n) {
  return n < 0 ? 0 : static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

constexpr bool in_triangle(int n, Site s) { return s.i >= 0 && s.j >= 0 && s.i + s.j <= n; }

/// Position of `s` in the (i + j, i) lexicographic order. Throws
/// std::out_of_range when the site lies outside the triangle.
std::size_t site_index(int n, Site s);

/// Inverse of site_index.
Site site_at(int n, std::size_t index);

/// All sites of the triangle in index order.
std::vector<Site> all_sites(int n);

/// Parses "i,j" into a Site. Throws std::invalid_argument on malformed input.
Site parse_site(const std::string& text);

std::string to_string(Site s);

}  // namespace ohwalk
