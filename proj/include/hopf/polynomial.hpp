#pragma once

#include "hopf/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Sparse multivariate polynomial over Q in the variables x1..xn.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(std::size_t n = 0) : n_(n) {}

  static Polynomial constant(std::size_t n, const Rational& c);
  /// x_{var+1}
  static Polynomial variable(std::size_t n, std::size_t var);

  std::size_t variables() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;

  void add_term(const Exponents& exponents, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void require_same(const Polynomial& other) const;

  std::size_t n_;
  TermMap terms_;
};

/// ∂f/∂x_{var+1}. Throws DomainError if var >= n.
Polynomial poly_derivative(const Polynomial& f, std::size_t var);

/// Parses sums of products such as `3*x1^2*x2 - 1/2*x2`, with parentheses.
/// `x` is accepted for x1. Throws ParseError with the offending position.
Polynomial parse_polynomial(std::string_view text, std::size_t n);

/// Terms by descending total degree, then descending exponents; "0" when zero.
std::string to_string(const Polynomial& p);

}  // namespace hopf
