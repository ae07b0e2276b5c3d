#include "gridrig/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gridrig {

namespace {

bool is_integer_text(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace gridrig
