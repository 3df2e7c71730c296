#pragma once

#include "hopf/hopf_algebra.hpp"
#include "hopf/trees.hpp"

#include <string_view>

namespace hopf {

/// Commutative monomial of unordered, unlabeled trees; the empty monomial is 1.
class ForestMonomial {
 public:
  ForestMonomial() = default;
  explicit ForestMonomial(std::vector<Tree> trees);
  explicit ForestMonomial(const Forest& forest) : ForestMonomial(forest.trees()) {}

  const std::vector<Tree>& trees() const noexcept { return trees_; }
  bool is_unit() const noexcept { return trees_.empty(); }
  /// Total node count.
  int degree() const noexcept;

  friend ForestMonomial operator*(const ForestMonomial& a, const ForestMonomial& b);
  friend bool operator==(const ForestMonomial&, const ForestMonomial&) = default;

 private:
  std::vector<Tree> trees_;
};

/// Trees joined by `*`; "1" for the empty monomial.
std::string canonical_key(const ForestMonomial& m);

/// Accepts `1`, a single tree, or trees joined by `*`.
ForestMonomial parse_forest_monomial(std::string_view text);

/// Removed edges, each named by the child-index path from the root to the edge's lower endpoint.
struct Cut {
  std::vector<std::vector<std::size_t>> removed_edges;
};

struct CutResult {
  Cut cut;
  ForestMonomial pruned;  // P^C: the pieces cut away
  Tree trunk;             // R^C: the piece containing the root
};

/// Every admissible cut (no two removed edges on one root-to-leaf path), the empty cut first.
std::vector<CutResult> admissible_cuts(const Tree& t);

/// Δ(t) = t ⊗ 1 + Σ_C P^C(t) ⊗ R^C(t), extended multiplicatively to monomials.
Tensor<ForestMonomial> ck_coproduct(const ForestMonomial& m);

Rational ck_counit(const ForestMonomial& m);

/// Order of the automorphism group of a rooted tree.
Integer symmetry_factor(const Tree& t);

/// |Aut| of a forest: tree symmetry factors times factorials of repeated-tree multiplicities.
Integer symmetry_factor(const ForestMonomial& m);

/// ⟨χ(t), a⟩ = (B₋(t), a): |Aut(a)| when B₋(t) and `a` are the same forest, 0 otherwise.
Rational chi_pairing(const Tree& t, const ForestMonomial& a);

/// Monomials of total node count `n`.
std::vector<ForestMonomial> enumerate_monomials(int n, std::optional<int> cap = std::nullopt);

class ConnesKreimer {
 public:
  using Basis = ForestMonomial;

  explicit ConnesKreimer(std::optional<int> cap = std::nullopt) : cap_(cap) {}

  ForestMonomial unit() const { return {}; }
  LinearCombination<ForestMonomial> product(const ForestMonomial& a, const ForestMonomial& b) const {
    return LinearCombination<ForestMonomial>(a * b);
  }
  Tensor<ForestMonomial> coproduct(const ForestMonomial& m) const { return ck_coproduct(m); }
  Rational counit(const ForestMonomial& m) const { return ck_counit(m); }
  int degree(const ForestMonomial& m) const { return m.degree(); }
  std::vector<ForestMonomial> basis(int n) const { return enumerate_monomials(n, cap_); }
  std::string name() const { return "ck"; }

 private:
  std::optional<int> cap_;
};

}  // namespace hopf
