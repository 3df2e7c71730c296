#include "hopf/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

namespace hopf {

Label Label::symbol(std::string name) {
  Label l;
  l.value_ = std::move(name);
  return l;
}

Label Label::number(std::uint32_t value) {
  Label l;
  l.value_ = value;
  return l;
}

std::string Label::text() const {
  if (is_symbol()) return symbol();
  if (is_number()) return std::to_string(number());
  return {};
}

namespace {

bool key_less(const Tree& a, const Tree& b) { return a.key() < b.key(); }

}  // namespace

Tree::Tree(Flavor flavor) : flavor_(flavor), key_("()") {}

Tree::Tree(Label label, std::vector<Tree> children, Flavor flavor)
    : label_(std::move(label)), children_(std::move(children)), flavor_(flavor) {
  for (const auto& c : children_) {
    if (c.flavor() != flavor_) throw DomainError("tree flavor mismatch between parent and child");
    nodes_ += c.node_count();
  }
  if (flavor_ == Flavor::Unordered) std::sort(children_.begin(), children_.end(), key_less);
  key_ = "(" + label_.text();
  if (!children_.empty()) {
    key_ += ';';
    for (const auto& c : children_) key_ += c.key();
  }
  key_ += ')';
}

Forest::Forest(std::vector<Tree> trees, Flavor flavor) : trees_(std::move(trees)), flavor_(flavor) {
  for (const auto& t : trees_)
    if (t.flavor() != flavor_) throw DomainError("forest flavor mismatch");
  if (flavor_ == Flavor::Unordered) std::sort(trees_.begin(), trees_.end(), key_less);
}

std::size_t Forest::node_count() const noexcept {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.node_count();
  return n;
}

Tree as_flavor(const Tree& t, Flavor flavor) {
  std::vector<Tree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(as_flavor(c, flavor));
  return Tree(t.label(), std::move(kids), flavor);
}

Tree canonicalize(const Tree& t) { return as_flavor(t, t.flavor()); }

Forest b_minus(const Tree& t) { return Forest(t.children(), t.flavor()); }

Tree graft_root(const Forest& f, Label root_label) { return Tree(std::move(root_label), f.trees(), f.flavor()); }

std::vector<const Tree*> preorder(const Tree& t) {
  std::vector<const Tree*> out;
  std::function<void(const Tree&)> walk = [&](const Tree& node) {
    out.push_back(&node);
    for (const auto& c : node.children()) walk(c);
  };
  walk(t);
  return out;
}

namespace {

// Rebuilds `node` with the members assigned to each pre-order id prepended to its children.
Tree rebuild_with(const Tree& node, std::size_t& counter, const std::vector<std::vector<const Tree*>>& buckets) {
  const std::size_t id = counter++;
  std::vector<Tree> kids;
  kids.reserve(node.children().size() + buckets[id].size());
  for (const Tree* g : buckets[id]) kids.push_back(*g);
  for (const auto& c : node.children()) kids.push_back(rebuild_with(c, counter, buckets));
  return Tree(node.label(), std::move(kids), node.flavor());
}

}  // namespace

LinearCombination<Tree> attach_all(const Forest& f, const Tree& t) {
  if (f.flavor() != t.flavor()) throw DomainError("attach_all: flavor mismatch");
  LinearCombination<Tree> out;
  const std::size_t targets = t.node_count();
  const std::size_t r = f.size();
  std::vector<std::size_t> choice(r, 0);
  while (true) {
    std::vector<std::vector<const Tree*>> buckets(targets);
    for (std::size_t i = 0; i < r; ++i) buckets[choice[i]].push_back(&f.trees()[i]);
    std::size_t counter = 0;
    out.add(rebuild_with(t, counter, buckets), Rational(1));
    std::size_t i = 0;
    while (i < r && ++choice[i] == targets) choice[i++] = 0;
    if (i == r) break;
  }
  return out;
}

bool has_numeric_labels(const Tree& t) {
  if (t.label().is_number()) return true;
  return std::any_of(t.children().begin(), t.children().end(), has_numeric_labels);
}

bool is_heap_ordered(const Tree& t) {
  if (!t.label().is_none()) return false;
  std::vector<std::uint32_t> seen;
  std::function<bool(const Tree&, std::uint32_t)> check = [&](const Tree& node, std::uint32_t parent) {
    for (const auto& c : node.children()) {
      if (!c.label().is_number()) return false;
      const auto v = c.label().number();
      if (v <= parent) return false;
      seen.push_back(v);
      if (!check(c, v)) return false;
    }
    return true;
  };
  if (!check(t, 0)) return false;
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != i + 1) return false;
  return true;
}

namespace {

Tree relabel(const Tree& t, const std::function<std::uint32_t(std::uint32_t)>& map) {
  std::vector<Tree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(relabel(c, map));
  Label l = t.label().is_number() ? Label::number(map(t.label().number())) : t.label();
  return Tree(std::move(l), std::move(kids), t.flavor());
}

void collect_numbers(const Tree& t, std::vector<std::uint32_t>& out) {
  if (t.label().is_number()) out.push_back(t.label().number());
  for (const auto& c : t.children()) collect_numbers(c, out);
}

}  // namespace

Tree shift_labels(const Tree& t, std::uint32_t m) {
  return relabel(t, [m](std::uint32_t v) { return v + m; });
}

Tree standardize_labels(const Tree& t) {
  std::vector<std::uint32_t> labels;
  collect_numbers(t, labels);
  std::sort(labels.begin(), labels.end());
  return relabel(t, [&](std::uint32_t v) {
    return static_cast<std::uint32_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin() + 1);
  });
}

int TreeFamily::default_cap() const noexcept {
  return kind == Kind::Rooted || kind == Kind::Ordered ? 8 : 6;
}

std::string TreeFamily::name() const {
  std::string base;
  switch (kind) {
    case Kind::Rooted: return "rooted";
    case Kind::Ordered: return "ordered";
    case Kind::HeapOrderedStandard: return "hot";
    case Kind::LabeledRooted: base = "labeled"; break;
    case Kind::LabeledOrdered: base = "labeled-ordered"; break;
  }
  base += "(";
  for (std::size_t i = 0; i < symbols.size(); ++i) base += (i ? "," : "") + symbols[i];
  return base + ")";
}

namespace {

// Planted subtrees (a labeled node with its descendants) grouped by node count,
// used to assemble root forests either as multisets or as sequences.
class ForestBuilder {
 public:
  ForestBuilder(std::vector<Label> labels, Flavor flavor) : labels_(std::move(labels)), flavor_(flavor) {}

  const std::vector<std::vector<Tree>>& forests(std::size_t nodes) {
    while (forests_.size() <= nodes) extend();
    return forests_[nodes];
  }

 private:
  void extend() {
    const std::size_t n = forests_.size();
    if (n == 0) {
      forests_.push_back({{}});
      return;
    }
    // planted trees with n nodes: a label over a forest of n-1 nodes
    std::vector<Tree> planted;
    for (const auto& l : labels_)
      for (const auto& kids : forests_[n - 1]) planted.emplace_back(l, kids, flavor_);
    planted_.push_back(std::move(planted));

    std::vector<std::vector<Tree>> out;
    std::vector<Tree> current;
    if (flavor_ == Flavor::Ordered) {
      std::function<void(std::size_t)> seq = [&](std::size_t remaining) {
        if (remaining == 0) {
          out.push_back(current);
          return;
        }
        for (std::size_t s = 1; s <= remaining; ++s)
          for (const auto& p : planted_[s - 1]) {
            current.push_back(p);
            seq(remaining - s);
            current.pop_back();
          }
      };
      seq(n);
    } else {
      // multisets: pick (size, index) pairs in non-decreasing order
      std::function<void(std::size_t, std::size_t, std::size_t)> multi = [&](std::size_t remaining, std::size_t size,
                                                                              std::size_t index) {
        if (remaining == 0) {
          out.push_back(current);
          return;
        }
        for (std::size_t s = size; s <= remaining; ++s)
          for (std::size_t i = (s == size ? index : 0); i < planted_[s - 1].size(); ++i) {
            current.push_back(planted_[s - 1][i]);
            multi(remaining - s, s, i);
            current.pop_back();
          }
      };
      multi(n, 1, 0);
    }
    forests_.push_back(std::move(out));
  }

  std::vector<Label> labels_;
  Flavor flavor_;
  std::vector<std::vector<Tree>> planted_;                // planted_[s-1]: planted trees with s nodes
  std::vector<std::vector<std::vector<Tree>>> forests_;  // forests_[n]: forests with n nodes
};

std::vector<Tree> heap_ordered_trees(int n) {
  std::vector<Tree> out;
  std::vector<std::uint32_t> parent(n + 1, 0);
  std::function<Tree(std::uint32_t)> build = [&](std::uint32_t node) {
    std::vector<Tree> kids;
    for (int c = 1; c <= n; ++c)
      if (parent[c] == node) kids.push_back(build(static_cast<std::uint32_t>(c)));
    return Tree(node == 0 ? Label{} : Label::number(node), std::move(kids));
  };
  // label k hangs below some node with a smaller label (0 is the root)
  std::function<void(int)> place = [&](int k) {
    if (k > n) {
      out.push_back(build(0));
      return;
    }
    for (int p = 0; p < k; ++p) {
      parent[k] = static_cast<std::uint32_t>(p);
      place(k + 1);
    }
  };
  place(1);
  return out;
}

}  // namespace

std::vector<Tree> enumerate(const TreeFamily& family, int degree, std::optional<int> cap) {
  const int limit = cap.value_or(family.default_cap());
  if (degree < 0) throw DomainError("enumerate: negative degree");
  if (degree > limit) {
    throw DomainError("enumerate: degree " + std::to_string(degree) + " exceeds cap " + std::to_string(limit));
  }
  if (family.kind == TreeFamily::Kind::HeapOrderedStandard) return heap_ordered_trees(degree);

  std::vector<Label> labels;
  if (family.kind == TreeFamily::Kind::LabeledRooted || family.kind == TreeFamily::Kind::LabeledOrdered) {
    if (family.symbols.empty()) throw DomainError("enumerate: labeled family needs at least one symbol");
    for (const auto& s : family.symbols) labels.push_back(Label::symbol(s));
  } else {
    labels.emplace_back();
  }
  ForestBuilder builder(std::move(labels), family.flavor());
  std::vector<Tree> out;
  for (const auto& kids : builder.forests(static_cast<std::size_t>(degree))) out.emplace_back(Label{}, kids, family.flavor());
  return out;
}

namespace {

class TreeParser {
 public:
  TreeParser(std::string_view text, Flavor flavor) : text_(text), flavor_(flavor) {}

  Tree parse() {
    skip_space();
    Tree t = node();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_space();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Label label() {
    skip_space();
    const std::size_t start = pos_;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 9 || digits[0] == '0') throw ParseError("numeric label must be a positive integer", start);
      return Label::number(static_cast<std::uint32_t>(std::stoul(std::string(digits))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      return Label::symbol(std::string(text_.substr(start, pos_ - start)));
    }
    return {};
  }

  Tree node() {
    expect('(');
    Label l = label();
    std::vector<Tree> kids;
    skip_space();
    if (peek() == ';') {
      ++pos_;
      skip_space();
      while (peek() == '(') {
        kids.push_back(node());
        skip_space();
      }
    }
    expect(')');
    return Tree(std::move(l), std::move(kids), flavor_);
  }

  std::string_view text_;
  Flavor flavor_;
  std::size_t pos_ = 0;
};

}  // namespace

Tree parse_tree(std::string_view text, Flavor flavor) { return TreeParser(text, flavor).parse(); }

}  // namespace hopf
