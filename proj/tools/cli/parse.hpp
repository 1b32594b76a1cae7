#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ohwalk::cli {

/// Evaluates a small real expression: numbers, `pi`, `sqrt(...)`,
/// parentheses, + - * / and implicit products such as `3pi/4`.
/// Throws std::invalid_argument on malformed input.
double parse_real(const std::string& text);

/// Comma separated parse_real values.
std::vector<double> parse_real_list(const std::string& text);

/// "a/b" with non-negative integer a and positive integer b.
std::pair<std::int64_t, std::int64_t> parse_ratio(const std::string& text);

}  // namespace ohwalk::cli
