#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf {

/// Exact rational scalar; always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Malformed textual input. `position` is the byte offset where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates an operation's precondition
/// (flavor mismatch, unknown label, dimension mismatch, cap exceeded).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `p`, `-p` or `p/q`. Throws ParseError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, otherwise "p/q".
std::string to_string(const Rational& r);

}  // namespace hopf
