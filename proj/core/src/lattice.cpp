#include "ohwalk/lattice.hpp"

#include <charconv>
#include <stdexcept>

namespace ohwalk {

std::size_t site_index(int n, Site s) {
  if (!in_triangle(n, s)) {
    throw std::out_of_range("site " + to_string(s) + " outside triangle of side " + std::to_string(n));
  }
  const auto diag = static_cast<std::size_t>(s.i + s.j);
  return diag * (diag + 1) / 2 + static_cast<std::size_t>(s.i);
}

Site site_at(int n, std::size_t index) {
  if (index >= site_count(n)) {
    throw std::out_of_range("site index " + std::to_string(index) + " out of range");
  }
  std::size_t diag = 0;
  while ((diag + 1) * (diag + 2) / 2 <= index) ++diag;
  const auto i = static_cast<int>(index - diag * (diag + 1) / 2);
  return {i, static_cast<int>(diag) - i};
}

std::vector<Site> all_sites(int n) {
  std::vector<Site> out;
  out.reserve(site_count(n));
  for (int d = 0; d <= n; ++d) {
    for (int i = 0; i <= d; ++i) out.push_back({i, d - i});
  }
  return out;
}

namespace {

int parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Site parse_site(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("site must be written as i,j; got '" + text + "'");
  }
  std::string_view view(text);
  return {parse_int(view.substr(0, comma)), parse_int(view.substr(comma + 1))};
}

std::string to_string(Site s) { return "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")"; }

}  // namespace ohwalk
