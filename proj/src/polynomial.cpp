#include "hopf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hopf {

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(Exponents(n, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t var) {
  if (var >= n) throw DomainError("variable index out of range");
  Exponents e(n, 0);
  e[var] = 1;
  Polynomial p(n);
  p.add_term(e, Rational(1));
  return p;
}

int Polynomial::total_degree() const noexcept {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return best;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coeff) {
  if (exponents.size() != n_) throw DomainError("exponent vector length does not match variable count");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same(const Polynomial& other) const {
  if (n_ != other.n_) throw DomainError("polynomial variable counts differ");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same(b);
  Polynomial out(a.n_);
  Polynomial::Exponents e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial out(a.n_);
  if (c == 0) return out;
  for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, v * c);
  return out;
}

Polynomial poly_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.variables()) throw DomainError("derivative variable index out of range");
  Polynomial out(f.variables());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    auto d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Polynomial parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expression();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expression() {
    Polynomial acc(n_);
    bool first = true;
    while (true) {
      char c = peek();
      bool negative = false;
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        return acc;
      }
      Polynomial t = term();
      if (negative) acc -= t;
      else acc += t;
      first = false;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      auto e = digits();
      if (e.size() > 4) throw ParseError("exponent too large", pos_);
      Polynomial out = Polynomial::constant(n_, 1);
      for (unsigned long k = std::stoul(std::string(e)); k > 0; --k) out = out * base;
      return out;
    }
    return base;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return text_.substr(start, pos_ - start);
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num{std::string(digits())};
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = Integer(std::string(digits()));
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return Polynomial::constant(n_, Rational(num, den));
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      std::size_t index = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        auto d = digits();
        index = d.size() > 6 ? 0 : std::stoul(std::string(d));
      }
      if (index == 0 || index > n_)
        throw ParseError("variable index out of range 1.." + std::to_string(n_), at);
      return Polynomial::variable(n_, index - 1);
    }
    throw ParseError(c == '\0' ? "unexpected end of input" : "unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n) { return PolyParser(text, n).parse(); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Polynomial::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  auto deg = [](const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); };
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    if (deg(a.first) != deg(b.first)) return deg(a.first) > deg(b.first);
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, coeff] : terms) {
    Rational c = coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += to_string(c);
    else if (c == 1) out += mono;
    else out += to_string(c) + "*" + mono;
    first = false;
  }
  return out;
}

}  // namespace hopf
