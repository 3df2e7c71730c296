#pragma once

#include "hopf/grafting.hpp"
#include "hopf/polynomial.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// E = Σ_μ a^μ D_μ, stored as its n coefficient polynomials.
struct Derivation {
  std::vector<Polynomial> coeffs;

  std::size_t variables() const noexcept { return coeffs.size(); }
  friend bool operator==(const Derivation&, const Derivation&) = default;
  friend Derivation operator+(const Derivation& a, const Derivation& b);
  /// Function-multiple f·E.
  friend Derivation operator*(const Polynomial& f, const Derivation& e);
};

/// Σ_μ a^μ ∂f/∂x_μ. Throws DomainError on a variable-count mismatch.
Polynomial derivation_apply(const Derivation& e, const Polynomial& f);

/// Symbol table E1..EM -> derivations over a shared variable count.
class DerivationEnv {
 public:
  explicit DerivationEnv(std::size_t n) : n_(n) {}

  /// `{ "n": 2, "E1": ["x1", "0"], ... }`
  static DerivationEnv from_json(std::string_view json_text);

  void define(const std::string& symbol, Derivation e);
  /// Throws DomainError for unknown symbols.
  const Derivation& at(const std::string& symbol) const;
  bool contains(const std::string& symbol) const { return table_.count(symbol) > 0; }
  std::size_t variables() const noexcept { return n_; }
  const std::map<std::string, Derivation>& symbols() const noexcept { return table_; }

 private:
  std::size_t n_;
  std::map<std::string, Derivation> table_;
};

/// Differential operator of a derivation-labeled tree applied to f: for every
/// assignment of an index to each non-root node, multiply the root's partial
/// derivative of f by each node's partial of its coefficient a^{index}, where
/// every node is differentiated along the indices of its children.
Polynomial psi_apply(const Tree& t, const DerivationEnv& env, const Polynomial& f);
Polynomial psi_apply(const LinearCombination<Tree>& c, const DerivationEnv& env, const Polynomial& f);

using SymbolWord = std::vector<std::string>;

/// Formal sum of words in the free algebra on E1..EM.
struct WordCombination {
  std::vector<std::pair<Rational, SymbolWord>> terms;
};

/// Parses `E3,E2,E1 - E3,E1,E2 + 2*E1`; words are comma-separated symbols.
WordCombination parse_word_combination(std::string_view text);

/// Grafting product of the two-node trees labeled by the word's symbols, in order.
LinearCombination<Tree> word_to_trees(const SymbolWord& word);
/// As above, rejecting symbols missing from `env`.
LinearCombination<Tree> word_to_trees(const SymbolWord& word, const DerivationEnv& env);

struct ExpandedTree {
  Tree tree;
  Rational coeff;
  std::string description;   // multi-index formula of the tree's operator
  std::size_t index_terms;   // n^k assignments summed by psi_apply
};

struct OperatorExpansion {
  Rational raw_tree_count;       // trees with multiplicity before cancellation
  std::size_t surviving_trees = 0;
  Rational surviving_multiplicity;
  std::vector<ExpandedTree> terms;

  Rational cancelled() const { return raw_tree_count - surviving_multiplicity; }
};

OperatorExpansion expand_operator(const WordCombination& words, const DerivationEnv& env);
OperatorExpansion expand_operator(const LinearCombination<Tree>& trees, const DerivationEnv& env);

/// The multi-index formula of one labeled tree, e.g.
/// `a[E1]^{i2} (D_{i2} a[E2]^{i1}) D_{i1} f`.
std::string describe_operator(const Tree& t);

struct DiagramCheck {
  bool commutes = false;
  Polynomial via_trees;
  Polynomial via_composition;
};

/// Compares ψ(word_to_trees(word)) f with E_{i1}(E_{i2}(…E_{ik}(f))).
DiagramCheck commuting_diagram_check(const SymbolWord& word, const DerivationEnv& env, const Polynomial& f);

}  // namespace hopf
