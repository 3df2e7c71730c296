#pragma once

#include "hopf/rational.hpp"

#include <concepts>
#include <map>
#include <string>
#include <utility>

namespace hopf {

/// A basis type is anything with a canonical serializer found by ADL.
/// Equal basis elements must serialize to identical keys.
template <class B>
concept CanonicalBasis = requires(const B& b) {
  { canonical_key(b) } -> std::convertible_to<std::string>;
};

/// Finite formal sum of basis elements with exact rational coefficients.
/// Terms are kept sorted by canonical key and never hold a zero coefficient.
template <CanonicalBasis B>
class LinearCombination {
 public:
  struct Term {
    B basis;
    Rational coeff;
  };
  using basis_type = B;
  using TermMap = std::map<std::string, Term>;

  LinearCombination() = default;
  explicit LinearCombination(B basis, Rational coeff = 1) { add(std::move(basis), std::move(coeff)); }

  /// Accumulates `coeff * basis`; a coefficient reaching zero removes the term.
  void add(B basis, const Rational& coeff) {
    if (coeff == 0) return;
    std::string key = canonical_key(basis);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), Term{std::move(basis), coeff});
      return;
    }
    it->second.coeff += coeff;
    if (it->second.coeff == 0) terms_.erase(it);
  }

  void add(const LinearCombination& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [key, term] : other.terms_) add(term.basis, term.coeff * scale);
  }

  const TermMap& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const B& basis) const {
    auto it = terms_.find(canonical_key(basis));
    return it == terms_.end() ? Rational(0) : it->second.coeff;
  }

  /// Sum of |coefficients|; for integer-coefficient sums this counts terms with multiplicity.
  Rational total_multiplicity() const {
    Rational total = 0;
    for (const auto& [key, term] : terms_) total += abs(term.coeff);
    return total;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [key, term] : a.terms_) {
      if (key != it->first || term.coeff != it->second.coeff) return false;
      ++it;
    }
    return true;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    a.add(b);
    return a;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    a.add(b, Rational(-1));
    return a;
  }
  friend LinearCombination operator-(const LinearCombination& a) {
    LinearCombination out;
    out.add(a, Rational(-1));
    return out;
  }
  friend LinearCombination operator*(const Rational& c, const LinearCombination& a) {
    LinearCombination out;
    out.add(a, c);
    return out;
  }

 private:
  TermMap terms_;
};

/// Elementary tensor `left ⊗ right`.
template <CanonicalBasis B>
struct TensorBasis {
  B left;
  B right;
};

template <CanonicalBasis B>
std::string canonical_key(const TensorBasis<B>& t) {
  return canonical_key(t.left) + " ⊗ " + canonical_key(t.right);
}

template <CanonicalBasis B>
using Tensor = LinearCombination<TensorBasis<B>>;

template <CanonicalBasis B>
LinearCombination<B> lc_add(const LinearCombination<B>& a, const LinearCombination<B>& b) {
  return a + b;
}

template <CanonicalBasis B>
LinearCombination<B> lc_scale(const Rational& c, const LinearCombination<B>& a) {
  return c * a;
}

template <CanonicalBasis B>
Tensor<B> lc_tensor(const LinearCombination<B>& a, const LinearCombination<B>& b) {
  Tensor<B> out;
  for (const auto& [ka, ta] : a)
    for (const auto& [kb, tb] : b) out.add(TensorBasis<B>{ta.basis, tb.basis}, ta.coeff * tb.coeff);
  return out;
}

/// Linear extension of `f: B -> LinearCombination<C>`.
template <CanonicalBasis B, class F>
auto linear_map(const LinearCombination<B>& a, F&& f) {
  using Out = std::decay_t<decltype(f(std::declval<const B&>()))>;
  Out out;
  for (const auto& [key, term] : a) out.add(f(term.basis), term.coeff);
  return out;
}

/// Bilinear extension of `f: B x B -> LinearCombination<C>`.
template <CanonicalBasis B, class F>
auto bilinear_map(const LinearCombination<B>& a, const LinearCombination<B>& b, F&& f) {
  using Out = std::decay_t<decltype(f(std::declval<const B&>(), std::declval<const B&>()))>;
  Out out;
  for (const auto& [ka, ta] : a)
    for (const auto& [kb, tb] : b) out.add(f(ta.basis, tb.basis), ta.coeff * tb.coeff);
  return out;
}

/// Human-readable sum, e.g. `(;(;())) + 2*(;()()) - (;())`; "0" when empty.
template <CanonicalBasis B>
std::string to_text(const LinearCombination<B>& a) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, term] : a) {
    Rational c = term.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += to_string(c) + "*";
    out += key;
    first = false;
  }
  return out;
}

}  // namespace hopf
