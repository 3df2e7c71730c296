#include "hopf/trees.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <set>

using namespace hopf;
using testing::T;

TEST_CASE("canonicalize sorts unordered children") {
  CHECK(canonicalize(Tree(Label{}, {T("(;())"), T("()")})).key() == "(;()(;()))");
  CHECK(T("(;(;())())").key() == "(;()(;()))");
  CHECK(T("(;(;())())", Flavor::Ordered).key() == "(;(;())())");
  CHECK(T("(;(E2)(E1))").key() == "(;(E1)(E2))");
}

TEST_CASE("canonicalize is idempotent") {
  for (int d = 0; d <= 5; ++d)
    for (const auto& t : enumerate(TreeFamily::rooted(), d)) CHECK(canonicalize(canonicalize(t)) == canonicalize(t));
}

TEST_CASE("degree") {
  CHECK(degree(T("()")) == 0);
  CHECK(degree(T("(;())")) == 1);
  CHECK(degree(T("(;()(;()))")) == 3);
}

TEST_CASE("b_minus and graft_root") {
  CHECK(b_minus(T("()")).empty());
  auto f = b_minus(T("(;()(;()))"));
  REQUIRE(f.size() == 2);
  CHECK(graft_root(Forest({}, Flavor::Unordered)) == T("()"));
  CHECK(graft_root(Forest({T("()"), T("()")}, Flavor::Unordered)) == T("(;()())"));
  for (auto family : {TreeFamily::rooted(), TreeFamily::ordered()})
    for (int d = 0; d <= 5; ++d)
      for (const auto& t : enumerate(family, d)) CHECK(graft_root(b_minus(t)) == t);
}

TEST_CASE("attach_all examples") {
  const Forest leaf({T("()")}, Flavor::Unordered);
  CHECK(attach_all(leaf, T("()")) == testing::L("(;())"));
  auto two = attach_all(leaf, T("(;())"));
  CHECK(two.size() == 2);
  CHECK(two.coefficient(T("(;()())")) == 1);
  CHECK(two.coefficient(T("(;(;()))")) == 1);
  auto pair = attach_all(Forest({T("()"), T("()")}, Flavor::Unordered), T("()"));
  CHECK(pair == testing::L("(;()())"));
  CHECK(attach_all(Forest({}, Flavor::Unordered), T("(;())")) == testing::L("(;())"));
}

TEST_CASE("attach_all has (nodes)^(forest size) terms with multiplicity") {
  for (auto family : {TreeFamily::rooted(), TreeFamily::ordered()})
    for (int df = 0; df <= 3; ++df)
      for (const auto& s : enumerate(family, df))
        for (int dt = 0; dt <= 3; ++dt)
          for (const auto& t : enumerate(family, dt)) {
            const Forest f = b_minus(s);
            Rational expected = 1;
            for (std::size_t i = 0; i < f.size(); ++i) expected *= static_cast<int>(t.node_count());
            auto sum = attach_all(f, t);
            CHECK(sum.total_multiplicity() == expected);
            for (const auto& [k, term] : sum) CHECK(degree(term.basis) == df + dt);
          }
}

TEST_CASE("attach_all rejects mixed flavors") {
  CHECK_THROWS_AS(attach_all(Forest({T("()")}, Flavor::Unordered), T("()", Flavor::Ordered)), DomainError);
}

TEST_CASE("enumeration counts agree with brute force") {
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(enumerate(TreeFamily::rooted(), n).size() == oracle::rooted_tree_count(n));
    CHECK(enumerate(TreeFamily::ordered(), n).size() == oracle::ordered_tree_count(n));
  }
  for (int n = 0; n <= 5; ++n) CHECK(enumerate(TreeFamily::heap_ordered(), n).size() == oracle::heap_ordered_count(n));
  for (int n = 0; n <= 3; ++n)
    CHECK(enumerate(TreeFamily::labeled({"E1", "E2"}), n).size() == oracle::colored_rooted_count(n, 2));
}

TEST_CASE("known counts") {
  const std::size_t rooted[] = {1, 1, 2, 4, 9, 20, 48, 115};
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) {
    CHECK(enumerate(TreeFamily::rooted(), n).size() == rooted[n]);
    CHECK(enumerate(TreeFamily::ordered(), n).size() == catalan[n]);
  }
  CHECK(enumerate(TreeFamily::heap_ordered(), 4).size() == 24);
  CHECK(enumerate(TreeFamily::labeled({"E1", "E2"}), 2).size() == 7);
}

TEST_CASE("enumerations have no duplicates and the right shape") {
  for (auto family : {TreeFamily::rooted(), TreeFamily::ordered(), TreeFamily::heap_ordered(),
                      TreeFamily::labeled({"E1", "E2"})})
    for (int n = 0; n <= 4; ++n) {
      std::set<std::string> keys;
      for (const auto& t : enumerate(family, n)) {
        keys.insert(t.key());
        CHECK(degree(t) == n);
        CHECK(t.flavor() == family.flavor());
        if (family.kind == TreeFamily::Kind::HeapOrderedStandard) CHECK(is_heap_ordered(t));
      }
      CHECK(keys.size() == enumerate(family, n).size());
    }
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate(TreeFamily::heap_ordered(), 7), DomainError);
  CHECK_NOTHROW(enumerate(TreeFamily::heap_ordered(), 7, 7));
  CHECK_THROWS_AS(enumerate(TreeFamily::rooted(), 9), DomainError);
  CHECK_THROWS_AS(enumerate(TreeFamily::rooted(), -1), DomainError);
}

TEST_CASE("heap-ordered helpers") {
  CHECK(is_heap_ordered(T("(;(1;(2))(3))")));
  CHECK_FALSE(is_heap_ordered(T("(;(2;(1)))")));
  CHECK_FALSE(is_heap_ordered(T("(;(1)(3))")));
  CHECK(shift_labels(T("(;(1;(2)))"), 3) == T("(;(4;(5)))"));
  CHECK(standardize_labels(T("(;(4;(7))(5))")) == T("(;(1;(3))(2))"));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_tree("(;("), ParseError);
  CHECK_THROWS_AS(parse_tree("x"), ParseError);
  CHECK_THROWS_AS(parse_tree("()()"), ParseError);
  try {
    parse_tree("(;()]");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}
