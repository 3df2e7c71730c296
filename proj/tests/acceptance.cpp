// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "hopf/connection.hpp"
#include "hopf/connes_kreimer.hpp"
#include "hopf/grafting.hpp"
#include "hopf/permutations.hpp"
#include "hopf/shuffle.hpp"
#include "test_support.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace hopf;
using testing::L;
using testing::T;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_ms;
  std::function<std::string()> run;  // empty string on success, otherwise the failure detail
};

std::string worked_products() {
  if (gl_product(T("(;())"), T("(;())")) != L("(;(;()))") + L("(;()())")) return "2-node times 2-node";
  if (gl_product(T("(;())"), T("(;(;()))")) != L("(;(;(;())))") + L("(;(;()()))") + L("(;()(;()))"))
    return "2-node times chain";
  return {};
}

std::string term_count_law() {
  for (auto family : {TreeFamily::rooted(), TreeFamily::ordered()})
    for (int d1 = 0; d1 <= 3; ++d1)
      for (const auto& t1 : enumerate(family, d1))
        for (int d2 = 0; d2 <= 3; ++d2)
          for (const auto& t2 : enumerate(family, d2)) {
            Rational expected = 1;
            for (std::size_t i = 0; i < b_minus(t1).size(); ++i) expected *= d2 + 1;
            if (gl_product(t1, t2).total_multiplicity() != expected) return t1.key() + " * " + t2.key();
          }
  return {};
}

std::string hopf_sweeps() {
  std::vector<HopfReport> reports = {
      verify_hopf(TreeAlgebra(TreeFamily::rooted()), 3, 3),
      verify_hopf(TreeAlgebra(TreeFamily::ordered()), 3, 3),
      verify_hopf(TreeAlgebra(TreeFamily::labeled({"E1", "E2"})), 3, 3),
      verify_hopf(TreeAlgebra(TreeFamily::heap_ordered()), 3, 3),
      verify_hopf(PermutationAlgebra{}, 3, 4),
  };
  for (const auto& r : reports)
    if (!r.passed()) return to_text(r);
  return {};
}

std::string heap_ordered_count() {
  std::size_t factorial = 1;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) factorial *= n;
    if (enumerate(TreeFamily::heap_ordered(), n).size() != factorial) return "n = " + std::to_string(n);
  }
  return {};
}

std::string ck_duality() {
  for (int d1 = 0; d1 <= 2; ++d1)
    for (const auto& t1 : enumerate(TreeFamily::rooted(), d1))
      for (int d2 = 0; d2 <= 2; ++d2)
        for (const auto& t2 : enumerate(TreeFamily::rooted(), d2)) {
          const auto prod = gl_product(t1, t2);
          for (const auto& a : enumerate_monomials(d1 + d2)) {
            Rational lhs = 0, rhs = 0;
            for (const auto& [k, term] : prod) lhs += term.coeff * chi_pairing(term.basis, a);
            for (const auto& [k, term] : ck_coproduct(a))
              rhs += term.coeff * chi_pairing(t1, term.basis.left) * chi_pairing(t2, term.basis.right);
            if (lhs != rhs) return t1.key() + ", " + t2.key() + ", " + canonical_key(a);
          }
        }
  return {};
}

std::string perm_hot_isomorphism() {
  auto trees = [](const LinearCombination<CyclePermutation>& x) {
    return linear_map(x, [](const auto& p) { return LinearCombination<Tree>(perm_to_hot(p)); });
  };
  for (std::uint32_t m = 0; m <= 4; ++m)
    for (const auto& s : all_permutations(m)) {
      Tensor<Tree> delta;
      for (const auto& [k, term] : perm_coproduct(s))
        delta.add(TensorBasis<Tree>{perm_to_hot(term.basis.left), perm_to_hot(term.basis.right)}, term.coeff);
      if (delta != gl_coproduct(perm_to_hot(s))) return "coproduct of " + canonical_key(s);
      for (std::uint32_t n = 0; m + n <= 4; ++n)
        for (const auto& t : all_permutations(n))
          if (trees(heap_product(s, t)) != gl_product(perm_to_hot(s), perm_to_hot(t)))
            return canonical_key(s) + " # " + canonical_key(t);
    }
  for (int d = 0; d <= 4; ++d)
    for (const auto& t : enumerate(TreeFamily::heap_ordered(), d))
      if (perm_to_hot(hot_to_perm(t)) != t) return "round trip of " + t.key();
  return {};
}

std::string rho_example() {
  auto r = relabel_rho({{1, 3}, {4}, {5, 7}});
  return r == parse_permutation("(1 2)(3)(4 5)") ? std::string{} : canonical_key(r);
}

std::string commuting_diagram() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dims(2, 3), length(1, 3), letter(0, 2);
  const std::vector<std::string> symbols = {"E1", "E2", "E3"};
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = dims(rng);
    auto env = testing::random_env(rng, n, 2, symbols);
    SymbolWord word;
    for (int k = length(rng); k > 0; --k) word.push_back(symbols[letter(rng)]);
    auto f = testing::random_polynomial(rng, n, 3);
    if (!commuting_diagram_check(word, env, f).commutes) return "instance " + std::to_string(i);
  }
  return {};
}

std::string cancellation_count() {
  DerivationEnv env(2);
  for (const auto& s : {"E1", "E2", "E3"}) env.define(s, {{parse_polynomial("x1", 2), parse_polynomial("x2", 2)}});
  auto x = expand_operator(parse_word_combination("E3,E2,E1 - E3,E1,E2 - E2,E1,E3 + E1,E2,E3"), env);
  if (x.raw_tree_count != 24 || x.surviving_multiplicity != 6)
    return "raw " + to_string(x.raw_tree_count) + ", surviving " + to_string(x.surviving_multiplicity);
  return {};
}

std::string module_algebra_law() {
  const std::vector<std::string> symbols = {"E1", "E2"};
  std::mt19937 rng(44);
  Connection curved(1);
  curved.set_gamma(0, 0, 0, parse_polynomial("1", 1));
  for (int trial = 0; trial < 3; ++trial) {
    auto flat_env = testing::random_env(rng, 2, 2, symbols);
    auto curved_env = testing::random_env(rng, 1, 2, symbols);
    auto a2 = testing::random_polynomial(rng, 2, 2), b2 = testing::random_polynomial(rng, 2, 2);
    auto a1 = testing::random_polynomial(rng, 1, 2), b1 = testing::random_polynomial(rng, 1, 2);
    for (int d = 0; d <= 2; ++d) {
      for (const auto& t : enumerate(TreeFamily::labeled(symbols), d)) {
        Polynomial rhs(2);
        for (const auto& [k, term] : gl_coproduct(t))
          rhs += term.coeff * (psi_apply(term.basis.left, flat_env, a2) * psi_apply(term.basis.right, flat_env, b2));
        if (psi_apply(t, flat_env, a2 * b2) != rhs) return "flat, " + t.key();
      }
      for (const auto& t : enumerate(TreeFamily::labeled_ordered(symbols), d)) {
        if (!module_algebra_check(t, flat_env, Connection(2), a2, b2)) return "flat ordered, " + t.key();
        if (!module_algebra_check(t, curved_env, curved, a1, b1)) return "curved, " + t.key();
      }
    }
  }
  return {};
}

std::string duality_dimensions() {
  Alphabet letters;
  for (int d = 1; d <= 5; ++d)
    for (const auto& t : enumerate(TreeFamily::ordered(), d))
      if (b_minus(t).size() == 1) letters.push_back({t.key(), d});
  for (int n = 0; n <= 5; ++n)
    if (word_count(letters, n) != Integer(enumerate(TreeFamily::ordered(), n).size()))
      return "n = " + std::to_string(n);
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked grafting products", 1, worked_products},
      {2, "term-count law (n+1)^r", 5000, term_count_law},
      {3, "Hopf axiom sweeps", 60000, hopf_sweeps},
      {4, "heap-ordered count n!", 10000, heap_ordered_count},
      {5, "cut coproduct duality", 30000, ck_duality},
      {6, "permutation / heap-ordered tree isomorphism", 30000, perm_hot_isomorphism},
      {7, "relabel (1 3)(4)(5 7)", 1, rho_example},
      {8, "commuting diagram, 100 random instances", 60000, commuting_diagram},
      {9, "cancellation 24 -> 6", 1000, cancellation_count},
      {10, "module algebra law, flat and curved", 120000, module_algebra_law},
      {11, "ordered trees vs words dimensions", 5000, duality_dimensions},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && ms > c.limit_ms) detail = "too slow";
    const bool ok = detail.empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "  (" << ms << " ms, limit "
              << c.limit_ms << " ms)";
    if (!ok) std::cout << "  " << detail;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
