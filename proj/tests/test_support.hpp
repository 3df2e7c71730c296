#pragma once

#include "hopf/connection.hpp"
#include "hopf/diff_ops.hpp"
#include "hopf/trees.hpp"
#include "oracles.hpp"

#include <random>
#include <string>
#include <unordered_map>

namespace testing {

inline hopf::Tree T(const std::string& s, hopf::Flavor f = hopf::Flavor::Unordered) { return hopf::parse_tree(s, f); }

inline hopf::LinearCombination<hopf::Tree> L(const std::string& s) { return hopf::LinearCombination<hopf::Tree>(T(s)); }

/// Parent array of a library tree (pre-order numbering) for the oracles.
inline oracle::ParentArray to_parent_array(const hopf::Tree& t) {
  auto nodes = hopf::preorder(t);
  std::unordered_map<const hopf::Tree*, int> id;
  for (std::size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = static_cast<int>(i);
  oracle::ParentArray parent(nodes.size(), -1);
  for (const auto* n : nodes)
    for (const auto& c : n->children()) parent[id[&c]] = id[n];
  return parent;
}

inline hopf::Polynomial random_polynomial(std::mt19937& rng, std::size_t n, int max_degree, int terms = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exponent(0, max_degree);
  hopf::Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    hopf::Polynomial::Exponents e(n, 0);
    int budget = max_degree;
    for (std::size_t i = 0; i < n; ++i) {
      int d = std::min(budget, exponent(rng));
      e[i] = static_cast<std::uint32_t>(d);
      budget -= d;
    }
    std::shuffle(e.begin(), e.end(), rng);
    p.add_term(e, hopf::Rational(coeff(rng)));
  }
  return p;
}

inline hopf::Derivation random_derivation(std::mt19937& rng, std::size_t n, int max_degree) {
  hopf::Derivation d;
  for (std::size_t i = 0; i < n; ++i) d.coeffs.push_back(random_polynomial(rng, n, max_degree, 2));
  return d;
}

inline hopf::DerivationEnv random_env(std::mt19937& rng, std::size_t n, int max_degree,
                                      const std::vector<std::string>& symbols) {
  hopf::DerivationEnv env(n);
  for (const auto& s : symbols) env.define(s, random_derivation(rng, n, max_degree));
  return env;
}

/// E1 = x·d/dx, E2 = x²·d/dx in one variable.
inline hopf::DerivationEnv euler_env() {
  hopf::DerivationEnv env(1);
  env.define("E1", {{hopf::parse_polynomial("x1", 1)}});
  env.define("E2", {{hopf::parse_polynomial("x1^2", 1)}});
  return env;
}

}  // namespace testing
