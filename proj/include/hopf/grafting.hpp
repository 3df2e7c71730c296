#pragma once

#include "hopf/hopf_algebra.hpp"
#include "hopf/trees.hpp"

namespace hopf {

/// Grafting product: the root subtrees of `t1` are attached to the nodes of `t2`
/// in all possible ways. When either factor carries numeric labels both must be
/// standard heap-ordered trees, and `t1` is relabeled above `t2` first.
/// Throws DomainError on flavor mismatch.
LinearCombination<Tree> gl_product(const Tree& t1, const Tree& t2);

/// Δ(t) = Σ over subsets X of the root's child positions of B₊(X) ⊗ B₊(rest).
/// Heap-ordered sides are relabeled onto {1..k}.
Tensor<Tree> gl_coproduct(const Tree& t);

/// 1 on the single-node tree, 0 otherwise.
Rational gl_counit(const Tree& t);

LinearCombination<Tree> gl_antipode(const Tree& t);

/// The tree Hopf algebra on one family, for the generic Hopf machinery.
class TreeAlgebra {
 public:
  using Basis = Tree;

  explicit TreeAlgebra(TreeFamily family, std::optional<int> cap = std::nullopt)
      : family_(std::move(family)), cap_(cap) {}

  Tree unit() const { return Tree(family_.flavor()); }
  LinearCombination<Tree> product(const Tree& a, const Tree& b) const { return gl_product(a, b); }
  Tensor<Tree> coproduct(const Tree& t) const { return gl_coproduct(t); }
  Rational counit(const Tree& t) const { return gl_counit(t); }
  int degree(const Tree& t) const { return hopf::degree(t); }
  std::vector<Tree> basis(int n) const { return enumerate(family_, n, cap_); }
  std::string name() const { return "gl/" + family_.name(); }

  const TreeFamily& family() const noexcept { return family_; }

 private:
  TreeFamily family_;
  std::optional<int> cap_;
};

}  // namespace hopf
