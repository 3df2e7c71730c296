#include "hopf/grafting.hpp"

namespace hopf {

LinearCombination<Tree> gl_product(const Tree& t1, const Tree& t2) {
  if (t1.flavor() != t2.flavor()) throw DomainError("gl_product: flavor mismatch");
  if (has_numeric_labels(t1) || has_numeric_labels(t2)) {
    if (!is_heap_ordered(t1) || !is_heap_ordered(t2))
      throw DomainError("gl_product: numerically labeled trees must be standard heap-ordered");
    return attach_all(b_minus(shift_labels(t1, static_cast<std::uint32_t>(degree(t2)))), t2);
  }
  return attach_all(b_minus(t1), t2);
}

Tensor<Tree> gl_coproduct(const Tree& t) {
  const auto& kids = t.children();
  const std::size_t r = kids.size();
  if (r >= 32) throw DomainError("gl_coproduct: root has too many children");
  const bool heap = has_numeric_labels(t);
  Tensor<Tree> out;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<Tree> chosen, rest;
    for (std::size_t i = 0; i < r; ++i) (mask & (1u << i) ? chosen : rest).push_back(kids[i]);
    Tree left = graft_root(Forest(std::move(chosen), t.flavor()));
    Tree right = graft_root(Forest(std::move(rest), t.flavor()));
    if (heap) {
      left = standardize_labels(left);
      right = standardize_labels(right);
    }
    out.add(TensorBasis<Tree>{std::move(left), std::move(right)}, Rational(1));
  }
  return out;
}

Rational gl_counit(const Tree& t) { return t.is_single_node() ? 1 : 0; }

LinearCombination<Tree> gl_antipode(const Tree& t) {
  TreeFamily family = t.flavor() == Flavor::Ordered ? TreeFamily::ordered() : TreeFamily::rooted();
  return antipode(TreeAlgebra(family), t);
}

}  // namespace hopf
