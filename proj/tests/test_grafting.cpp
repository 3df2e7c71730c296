#include "hopf/grafting.hpp"
#include "hopf/shuffle.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace hopf;
using testing::L;
using testing::T;

namespace {

const Tree e = T("()");
const Tree two = T("(;())");
const Tree chain3 = T("(;(;()))");
const Tree vee = T("(;()())");

Tensor<Tree> swap(const Tensor<Tree>& x) {
  Tensor<Tree> out;
  for (const auto& [k, term] : x) out.add(TensorBasis<Tree>{term.basis.right, term.basis.left}, term.coeff);
  return out;
}

}  // namespace

TEST_CASE("product of two 2-node trees") {
  CHECK(gl_product(two, two) == L("(;(;()))") + L("(;()())"));
}

TEST_CASE("product of a 2-node tree with a chain") {
  auto p = gl_product(two, chain3);
  CHECK(p == L("(;(;(;())))") + L("(;(;()()))") + L("(;()(;()))"));
}

TEST_CASE("single-node tree is a two-sided unit") {
  for (auto family : {TreeFamily::rooted(), TreeFamily::ordered(), TreeFamily::heap_ordered()})
    for (int d = 0; d <= 4; ++d)
      for (const auto& t : enumerate(family, d)) {
        const Tree unit(family.flavor());
        CHECK(gl_product(unit, t) == LinearCombination<Tree>(t));
        CHECK(gl_product(t, unit) == LinearCombination<Tree>(t));
      }
}

TEST_CASE("product rejects mixed flavors") {
  CHECK_THROWS_AS(gl_product(two, T("(;())", Flavor::Ordered)), DomainError);
}

TEST_CASE("heap-ordered product relabels the left factor") {
  CHECK(gl_product(T("(;(1))"), T("(;(1))")) == L("(;(1)(2))") + L("(;(1;(2)))"));
  CHECK_THROWS_AS(gl_product(T("(;(2))"), T("(;(1))")), DomainError);
}

TEST_CASE("coproduct examples") {
  CHECK(gl_coproduct(e) == lc_tensor(L("()"), L("()")));
  CHECK(gl_coproduct(chain3) == lc_tensor(L("()"), L("(;(;()))")) + lc_tensor(L("(;(;()))"), L("()")));
  CHECK(gl_coproduct(vee) ==
        lc_tensor(L("()"), L("(;()())")) + lc_scale(Rational(2), lc_tensor(L("(;())"), L("(;())"))) +
            lc_tensor(L("(;()())"), L("()")));
}

TEST_CASE("coproduct has 2^r terms with multiplicity") {
  for (auto family : {TreeFamily::rooted(), TreeFamily::ordered(), TreeFamily::heap_ordered()})
    for (int d = 0; d <= 4; ++d)
      for (const auto& t : enumerate(family, d))
        CHECK(gl_coproduct(t).total_multiplicity() == Rational(1 << b_minus(t).size()));
}

TEST_CASE("counit") {
  CHECK(gl_counit(e) == 1);
  CHECK(gl_counit(two) == 0);
  for (int d = 0; d <= 4; ++d)
    for (const auto& t : enumerate(TreeFamily::rooted(), d)) {
      LinearCombination<Tree> left;
      for (const auto& [k, term] : gl_coproduct(t)) left.add(term.basis.right, term.coeff * gl_counit(term.basis.left));
      CHECK(left == LinearCombination<Tree>(t));
    }
}

TEST_CASE("antipode examples") {
  CHECK(gl_antipode(e) == L("()"));
  CHECK(gl_antipode(two) == lc_scale(Rational(-1), L("(;())")));
  CHECK(gl_antipode(vee) == L("(;()())") + lc_scale(Rational(2), L("(;(;()))")));
  // m(S ⊗ id)Δ(V) computed directly from the product
  LinearCombination<Tree> sum;
  for (const auto& [k, term] : gl_coproduct(vee))
    for (const auto& [k2, s] : gl_antipode(term.basis.left))
      sum.add(gl_product(s.basis, term.basis.right), term.coeff * s.coeff);
  CHECK(sum.empty());
}

TEST_CASE("Hopf axioms hold on every flavor") {
  for (auto family : {TreeFamily::rooted(), TreeFamily::ordered(), TreeFamily::heap_ordered(),
                      TreeFamily::labeled({"E1", "E2"}), TreeFamily::labeled_ordered({"E1", "E2"})}) {
    auto report = verify_hopf(TreeAlgebra(family), 3, 3);
    INFO(to_text(report));
    CHECK(report.passed());
  }
  auto report = verify_hopf(TreeAlgebra(TreeFamily::rooted()), 4, 4);
  INFO(to_text(report));
  CHECK(report.passed());
}

TEST_CASE("grading and cocommutativity") {
  for (auto family : {TreeFamily::rooted(), TreeFamily::ordered(), TreeFamily::heap_ordered()})
    for (int d = 0; d <= 4; ++d)
      for (const auto& t : enumerate(family, d)) {
        const auto delta = gl_coproduct(t);
        CHECK(swap(delta) == delta);
        for (const auto& [k, term] : delta) CHECK(degree(term.basis.left) + degree(term.basis.right) == d);
      }
}

TEST_CASE("product multiplicity is (deg t2 + 1)^r") {
  for (int d1 = 0; d1 <= 3; ++d1)
    for (const auto& t1 : enumerate(TreeFamily::rooted(), d1))
      for (int d2 = 0; d2 <= 3; ++d2)
        for (const auto& t2 : enumerate(TreeFamily::rooted(), d2)) {
          Rational expected = 1;
          for (std::size_t i = 0; i < b_minus(t1).size(); ++i) expected *= d2 + 1;
          const auto p = gl_product(t1, t2);
          CHECK(p.total_multiplicity() == expected);
          for (const auto& [k, term] : p) CHECK(degree(term.basis) == d1 + d2);
        }
}

TEST_CASE("ordered trees and words over one-child trees have equal dimensions") {
  Alphabet letters;
  for (int d = 1; d <= 5; ++d)
    for (const auto& t : enumerate(TreeFamily::ordered(), d))
      if (b_minus(t).size() == 1) letters.push_back({t.key(), d});
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(word_count(letters, n) == Integer(enumerate(TreeFamily::ordered(), n).size()));
  }
}
