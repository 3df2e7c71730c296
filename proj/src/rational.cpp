#include "hopf/rational.hpp"

#include <cctype>

namespace hopf {

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected digits", offset);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected digit", offset + i);
  }
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = 1;
  }
  auto slash = text.find('/', start);
  Integer num = parse_integer(text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start), start);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hopf
