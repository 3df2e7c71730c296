#pragma once

#include "hopf/linear_combination.hpp"

#include <concepts>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hopf {

/// A graded connected Hopf algebra given on a basis.
template <class A>
concept HopfAlgebra = requires(const A& alg, const typename A::Basis& x, int n) {
  requires CanonicalBasis<typename A::Basis>;
  { alg.unit() } -> std::same_as<typename A::Basis>;
  { alg.product(x, x) } -> std::same_as<LinearCombination<typename A::Basis>>;
  { alg.coproduct(x) } -> std::same_as<Tensor<typename A::Basis>>;
  { alg.counit(x) } -> std::convertible_to<Rational>;
  { alg.degree(x) } -> std::convertible_to<int>;
  { alg.basis(n) } -> std::same_as<std::vector<typename A::Basis>>;
  { alg.name() } -> std::convertible_to<std::string>;
};

template <HopfAlgebra A>
LinearCombination<typename A::Basis> multiply(const A& alg, const LinearCombination<typename A::Basis>& a,
                                              const LinearCombination<typename A::Basis>& b) {
  return bilinear_map(a, b, [&](const auto& x, const auto& y) { return alg.product(x, y); });
}

template <HopfAlgebra A>
Tensor<typename A::Basis> comultiply(const A& alg, const LinearCombination<typename A::Basis>& a) {
  return linear_map(a, [&](const auto& x) { return alg.coproduct(x); });
}

/// Componentwise product on H ⊗ H.
template <HopfAlgebra A>
Tensor<typename A::Basis> multiply_tensors(const A& alg, const Tensor<typename A::Basis>& a,
                                           const Tensor<typename A::Basis>& b) {
  using B = typename A::Basis;
  Tensor<B> out;
  for (const auto& [ka, ta] : a)
    for (const auto& [kb, tb] : b) {
      auto left = alg.product(ta.basis.left, tb.basis.left);
      auto right = alg.product(ta.basis.right, tb.basis.right);
      out.add(lc_tensor(left, right), ta.coeff * tb.coeff);
    }
  return out;
}

/// Antipode by the graded-connected recursion S(x) = -Σ S(x')x'' over every
/// coproduct term except x ⊗ 1. Results are memoized per call tree in `memo`.
template <HopfAlgebra A>
class Antipode {
 public:
  using B = typename A::Basis;

  explicit Antipode(const A& alg) : alg_(alg) {}

  const LinearCombination<B>& operator()(const B& x) {
    const std::string key = canonical_key(x);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LinearCombination<B> out;
    const B unit = alg_.unit();
    if (key == canonical_key(unit)) {
      out.add(unit, Rational(1));
    } else {
      const std::string unit_key = canonical_key(unit);
      for (const auto& [k, term] : alg_.coproduct(x)) {
        if (canonical_key(term.basis.left) == key && canonical_key(term.basis.right) == unit_key) continue;
        LinearCombination<B> s_left = (*this)(term.basis.left);
        out.add(multiply(alg_, s_left, LinearCombination<B>(term.basis.right)), -term.coeff);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  LinearCombination<B> apply(const LinearCombination<B>& a) {
    return linear_map(a, [&](const B& x) { return (*this)(x); });
  }

 private:
  const A& alg_;
  std::map<std::string, LinearCombination<B>> memo_;
};

template <HopfAlgebra A>
LinearCombination<typename A::Basis> antipode(const A& alg, const typename A::Basis& x) {
  Antipode<A> s(alg);
  return s(x);
}

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::size_t checks = 0;
  std::string counterexample;
};

struct HopfReport {
  std::string algebra;
  int max_degree = 0;
  int max_product_degree = 0;
  std::vector<AxiomResult> axioms;

  bool passed() const {
    for (const auto& a : axioms)
      if (!a.passed) return false;
    return true;
  }
};

namespace detail {

/// Opaque basis used to compare iterated coproducts in H ⊗ H ⊗ H.
struct KeyBasis {
  std::string key;
};
inline std::string canonical_key(const KeyBasis& k) { return k.key; }

class AxiomRecorder {
 public:
  explicit AxiomRecorder(std::string name) { result_.axiom = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
};

}  // namespace detail

/// Exhaustively checks the Hopf axioms on the basis up to `max_degree`.
/// Products (associativity, bialgebra compatibility) are checked on all pairs
/// and triples whose total degree is at most `max_product_degree`.
template <HopfAlgebra A>
HopfReport verify_hopf(const A& alg, int max_degree, int max_product_degree) {
  using B = typename A::Basis;
  using LC = LinearCombination<B>;
  using detail::AxiomRecorder;
  using detail::KeyBasis;

  const int top = std::max(max_degree, max_product_degree);
  std::vector<std::vector<B>> by_degree;
  for (int d = 0; d <= top; ++d) by_degree.push_back(alg.basis(d));

  HopfReport report;
  report.algebra = alg.name();
  report.max_degree = max_degree;
  report.max_product_degree = max_product_degree;

  const B e = alg.unit();
  const LC unit_lc(e);
  auto key = [](const B& x) { return canonical_key(x); };

  AxiomRecorder assoc("associativity"), unit("unit"), coassoc("coassociativity"), counit("counit"),
      compat("bialgebra compatibility"), anti("antipode");

  // pairs and triples bounded by total degree
  for (int d1 = 0; d1 <= max_product_degree; ++d1)
    for (int d2 = 0; d1 + d2 <= max_product_degree; ++d2)
      for (const auto& x : by_degree[d1])
        for (const auto& y : by_degree[d2]) {
          const LC xy = alg.product(x, y);
          for (const auto& [k, term] : xy)
            if (alg.degree(term.basis) != d1 + d2) {
              compat.check(false, [&] { return "product not graded: " + key(x) + " * " + key(y); });
            }
          const auto lhs = comultiply(alg, xy);
          const auto rhs = multiply_tensors(alg, alg.coproduct(x), alg.coproduct(y));
          compat.check(lhs == rhs, [&] { return "Δ(" + key(x) + " * " + key(y) + ")"; });
          Rational eps = 0;
          for (const auto& [k, term] : xy) eps += term.coeff * Rational(alg.counit(term.basis));
          compat.check(eps == Rational(alg.counit(x)) * Rational(alg.counit(y)),
                       [&] { return "ε(" + key(x) + " * " + key(y) + ")"; });
          for (int d3 = 0; d1 + d2 + d3 <= max_product_degree; ++d3)
            for (const auto& z : by_degree[d3]) {
              const LC left = multiply(alg, xy, LC(z));
              const LC right = multiply(alg, LC(x), alg.product(y, z));
              assoc.check(left == right, [&] { return "(" + key(x) + " * " + key(y) + ") * " + key(z); });
            }
        }

  for (int d = 0; d <= max_degree; ++d)
    for (const auto& x : by_degree[d]) {
      const LC xl(x);
      unit.check(alg.product(e, x) == xl && alg.product(x, e) == xl, [&] { return key(x); });

      const auto delta = alg.coproduct(x);
      LinearCombination<KeyBasis> left_first, right_first;
      LC eps_left, eps_right;
      for (const auto& [k, term] : delta) {
        const auto& [l, r] = term.basis;
        for (const auto& [k2, t2] : alg.coproduct(l))
          left_first.add(KeyBasis{key(t2.basis.left) + " ⊗ " + key(t2.basis.right) + " ⊗ " + key(r)},
                         term.coeff * t2.coeff);
        for (const auto& [k2, t2] : alg.coproduct(r))
          right_first.add(KeyBasis{key(l) + " ⊗ " + key(t2.basis.left) + " ⊗ " + key(t2.basis.right)},
                          term.coeff * t2.coeff);
        eps_left.add(r, term.coeff * Rational(alg.counit(l)));
        eps_right.add(l, term.coeff * Rational(alg.counit(r)));
      }
      coassoc.check(left_first == right_first, [&] { return key(x); });
      counit.check(eps_left == xl && eps_right == xl, [&] { return key(x); });
    }

  Antipode<A> s(alg);
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& x : by_degree[d]) {
      LC left, right;
      for (const auto& [k, term] : alg.coproduct(x)) {
        left.add(multiply(alg, s(term.basis.left), LC(term.basis.right)), term.coeff);
        right.add(multiply(alg, LC(term.basis.left), s(term.basis.right)), term.coeff);
      }
      const LC expected = Rational(alg.counit(x)) * unit_lc;
      anti.check(left == expected && right == expected, [&] { return key(x); });
    }

  for (auto* r : {&assoc, &unit, &coassoc, &counit, &compat, &anti}) report.axioms.push_back(r->take());
  return report;
}

/// Multi-line "axiom: PASS (checks)" summary.
inline std::string to_text(const HopfReport& report) {
  std::ostringstream out;
  out << report.algebra << " (degree <= " << report.max_degree << ", products <= " << report.max_product_degree
      << ")\n";
  for (const auto& a : report.axioms) {
    out << "  " << a.axiom << ": " << (a.passed ? "PASS" : "FAIL") << " (" << a.checks << " checks)";
    if (!a.passed) out << " counterexample: " << a.counterexample;
    out << '\n';
  }
  return out.str();
}

}  // namespace hopf
