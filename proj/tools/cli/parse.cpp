#include "cli/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace ohwalk::cli {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& text) : text_(text) {}

  double parse() {
    const double value = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse '" + text_ + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip_space();
    return pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(');
  }

  double sum() {
    double value = product();
    for (;;) {
      if (accept('+')) {
        value += product();
      } else if (accept('-')) {
        value -= product();
      } else {
        return value;
      }
    }
  }

  double product() {
    double value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        value /= unary();
      } else if (starts_primary()) {
        value *= primary();
      } else {
        return value;
      }
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  double primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      const double value = sum();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (name == "pi") return std::numbers::pi;
      if (name == "sqrt") {
        if (!accept('(')) fail("sqrt needs '('");
        const double value = sum();
        if (!accept(')')) fail("missing ')'");
        if (value < 0.0) fail("sqrt of a negative number");
        return std::sqrt(value);
      }
      fail("unknown name '" + name + "'");
    }
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) fail("expected a number at '" + text_.substr(pos_) + "'");
    pos_ += static_cast<std::size_t>(end - begin);
    return value;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

std::int64_t parse_integer(const std::string& text, const std::string& whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("ratio must be a/b with integers, got '" + whole + "'");
  }
  return value;
}

}  // namespace

double parse_real(const std::string& text) {
  const double value = ExpressionParser(text).parse();
  if (!std::isfinite(value)) throw std::invalid_argument("'" + text + "' is not a finite number");
  return value;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

std::pair<std::int64_t, std::int64_t> parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("ratio must be a/b, got '" + text + "'");
  const std::int64_t a = parse_integer(text.substr(0, slash), text);
  const std::int64_t b = parse_integer(text.substr(slash + 1), text);
  if (a < 0 || b <= 0) throw std::invalid_argument("ratio needs a >= 0 and b > 0, got '" + text + "'");
  return {a, b};
}

}  // namespace ohwalk::cli
