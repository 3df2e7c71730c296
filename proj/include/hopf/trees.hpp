#pragma once

#include "hopf/linear_combination.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hopf {

enum class Flavor { Unordered, Ordered };

/// Node label: none, a symbol such as `E1`, or a positive integer (heap-ordered trees).
class Label {
 public:
  Label() = default;
  static Label symbol(std::string name);
  static Label number(std::uint32_t value);

  bool is_none() const noexcept { return std::holds_alternative<std::monostate>(value_); }
  bool is_symbol() const noexcept { return std::holds_alternative<std::string>(value_); }
  bool is_number() const noexcept { return std::holds_alternative<std::uint32_t>(value_); }
  const std::string& symbol() const { return std::get<std::string>(value_); }
  std::uint32_t number() const { return std::get<std::uint32_t>(value_); }

  /// "" for none, the identifier, or the decimal integer.
  std::string text() const;

  friend bool operator==(const Label&, const Label&) = default;

 private:
  std::variant<std::monostate, std::string, std::uint32_t> value_;
};

/// Finite rooted tree. Unordered trees keep their children sorted by canonical
/// encoding, so two isomorphic unordered trees compare equal; ordered trees keep
/// the child sequence as given. Every node of a tree shares one flavor.
class Tree {
 public:
  /// The single-node tree e.
  explicit Tree(Flavor flavor = Flavor::Unordered);
  Tree(Label label, std::vector<Tree> children, Flavor flavor = Flavor::Unordered);

  const Label& label() const noexcept { return label_; }
  const std::vector<Tree>& children() const noexcept { return children_; }
  Flavor flavor() const noexcept { return flavor_; }
  std::size_t node_count() const noexcept { return nodes_; }
  bool is_single_node() const noexcept { return children_.empty(); }

  /// Nested-parenthesis encoding: `(` label [`;` children] `)`.
  const std::string& key() const noexcept { return key_; }

  friend bool operator==(const Tree& a, const Tree& b) { return a.flavor_ == b.flavor_ && a.key_ == b.key_; }

 private:
  Label label_;
  std::vector<Tree> children_;
  Flavor flavor_;
  std::size_t nodes_ = 1;
  std::string key_;
};

inline std::string canonical_key(const Tree& t) { return t.key(); }

/// Sequence of trees; unordered forests are kept sorted (multiset semantics).
class Forest {
 public:
  explicit Forest(Flavor flavor = Flavor::Unordered) : flavor_(flavor) {}
  Forest(std::vector<Tree> trees, Flavor flavor);

  const std::vector<Tree>& trees() const noexcept { return trees_; }
  Flavor flavor() const noexcept { return flavor_; }
  std::size_t size() const noexcept { return trees_.size(); }
  bool empty() const noexcept { return trees_.empty(); }
  std::size_t node_count() const noexcept;

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> trees_;
  Flavor flavor_;
};

/// Recursively re-sorts unordered children; ordered trees come back unchanged.
Tree canonicalize(const Tree& t);

/// Rebuilds `t` with every node switched to `flavor`.
Tree as_flavor(const Tree& t, Flavor flavor);

/// Node count minus one.
inline int degree(const Tree& t) { return static_cast<int>(t.node_count()) - 1; }

/// Removes the root, returning its child subtrees.
Forest b_minus(const Tree& t);

/// Attaches the forest as the children of a fresh root.
Tree graft_root(const Forest& f, Label root_label = {});

/// Sum over every way of making each member of `f` a child of some node of `t`.
/// Ordered trees receive the grafted members leftmost, in forest order.
/// Throws DomainError on flavor mismatch.
LinearCombination<Tree> attach_all(const Forest& f, const Tree& t);

/// Pre-order node list (root first, children in stored order).
std::vector<const Tree*> preorder(const Tree& t);

bool has_numeric_labels(const Tree& t);

/// Standard heap order: unlabeled root, non-root labels exactly {1..n}, and
/// every child's label exceeds its parent's.
bool is_heap_ordered(const Tree& t);

/// Adds `m` to every numeric label.
Tree shift_labels(const Tree& t, std::uint32_t m);

/// Relabels numeric labels order-isomorphically onto {1..k}.
Tree standardize_labels(const Tree& t);

struct TreeFamily {
  enum class Kind { Rooted, Ordered, HeapOrderedStandard, LabeledRooted, LabeledOrdered };
  Kind kind = Kind::Rooted;
  std::vector<std::string> symbols;

  static TreeFamily rooted() { return {Kind::Rooted, {}}; }
  static TreeFamily ordered() { return {Kind::Ordered, {}}; }
  static TreeFamily heap_ordered() { return {Kind::HeapOrderedStandard, {}}; }
  static TreeFamily labeled(std::vector<std::string> symbols) { return {Kind::LabeledRooted, std::move(symbols)}; }
  static TreeFamily labeled_ordered(std::vector<std::string> symbols) {
    return {Kind::LabeledOrdered, std::move(symbols)};
  }

  Flavor flavor() const noexcept {
    return kind == Kind::Ordered || kind == Kind::LabeledOrdered ? Flavor::Ordered : Flavor::Unordered;
  }
  /// 8 for unlabeled families, 6 for heap-ordered and labeled ones.
  int default_cap() const noexcept;
  std::string name() const;
};

/// All distinct canonical trees of the family with `degree + 1` nodes.
/// Throws DomainError if `degree` is negative or above the cap.
std::vector<Tree> enumerate(const TreeFamily& family, int degree, std::optional<int> cap = std::nullopt);

/// Parses the canonical grammar `tree := '(' label? (';' tree*)? ')'`.
Tree parse_tree(std::string_view text, Flavor flavor = Flavor::Unordered);

}  // namespace hopf
