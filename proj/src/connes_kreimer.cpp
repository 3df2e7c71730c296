#include "hopf/connes_kreimer.hpp"

#include <algorithm>
#include <functional>

namespace hopf {

namespace {

void require_plain(const Tree& t) {
  if (t.flavor() != Flavor::Unordered) throw DomainError("Connes-Kreimer trees must be unordered");
  for (const Tree* node : preorder(t))
    if (!node->label().is_none()) throw DomainError("Connes-Kreimer trees must be unlabeled");
}

// Product over runs of equal (sorted) trees of multiplicity! times each tree's factor.
Integer sorted_group_factor(const std::vector<Tree>& sorted) {
  Integer out = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out *= symmetry_factor(sorted[i]);
    run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
    out *= run;
  }
  return out;
}

}  // namespace

ForestMonomial::ForestMonomial(std::vector<Tree> trees) : trees_(std::move(trees)) {
  for (const auto& t : trees_) require_plain(t);
  std::sort(trees_.begin(), trees_.end(), [](const Tree& a, const Tree& b) { return a.key() < b.key(); });
}

int ForestMonomial::degree() const noexcept {
  int n = 0;
  for (const auto& t : trees_) n += static_cast<int>(t.node_count());
  return n;
}

ForestMonomial operator*(const ForestMonomial& a, const ForestMonomial& b) {
  std::vector<Tree> all = a.trees_;
  all.insert(all.end(), b.trees_.begin(), b.trees_.end());
  return ForestMonomial(std::move(all));
}

std::string canonical_key(const ForestMonomial& m) {
  if (m.trees().empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.trees().size(); ++i) out += (i ? "*" : "") + m.trees()[i].key();
  return out;
}

ForestMonomial parse_forest_monomial(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError("empty forest monomial", 0);
  std::string_view body = text.substr(first, last - first + 1);
  if (body == "1") return {};
  std::vector<Tree> trees;
  std::size_t start = 0;
  while (true) {
    std::size_t star = body.find('*', start);
    auto piece = body.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    try {
      trees.push_back(parse_tree(piece));
    } catch (const ParseError& e) {
      throw ParseError("bad tree in forest monomial", first + start + e.position());
    }
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return ForestMonomial(std::move(trees));
}

std::vector<CutResult> admissible_cuts(const Tree& t) {
  require_plain(t);
  // For each node: the admissible cuts of its subtree, as (removed paths, pruned trees, trunk).
  struct Partial {
    std::vector<std::vector<std::size_t>> removed;
    std::vector<Tree> pruned;
    Tree trunk;
  };
  std::function<std::vector<Partial>(const Tree&)> cuts_of = [&](const Tree& node) {
    std::vector<Partial> acc{Partial{{}, {}, Tree()}};
    std::vector<std::vector<Tree>> trunk_kids{{}};
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      const Tree& child = node.children()[i];
      std::vector<Partial> next;
      std::vector<std::vector<Tree>> next_kids;
      auto below = cuts_of(child);
      for (std::size_t a = 0; a < acc.size(); ++a) {
        // keep the edge and cut admissibly below it
        for (const auto& b : below) {
          Partial p = acc[a];
          for (auto path : b.removed) {
            path.insert(path.begin(), i);
            p.removed.push_back(std::move(path));
          }
          p.pruned.insert(p.pruned.end(), b.pruned.begin(), b.pruned.end());
          auto kids = trunk_kids[a];
          kids.push_back(b.trunk);
          next.push_back(std::move(p));
          next_kids.push_back(std::move(kids));
        }
        // remove the edge: the whole child subtree is pruned
        Partial p = acc[a];
        p.removed.push_back({i});
        p.pruned.push_back(child);
        next.push_back(std::move(p));
        next_kids.push_back(trunk_kids[a]);
      }
      acc = std::move(next);
      trunk_kids = std::move(next_kids);
    }
    for (std::size_t a = 0; a < acc.size(); ++a) acc[a].trunk = Tree(node.label(), trunk_kids[a]);
    return acc;
  };
  std::vector<CutResult> out;
  for (auto& p : cuts_of(t)) {
    std::sort(p.removed.begin(), p.removed.end());
    out.push_back(CutResult{Cut{std::move(p.removed)}, ForestMonomial(std::move(p.pruned)), std::move(p.trunk)});
  }
  std::stable_sort(out.begin(), out.end(), [](const CutResult& a, const CutResult& b) {
    return a.cut.removed_edges.size() < b.cut.removed_edges.size();
  });
  return out;
}

namespace {

Tensor<ForestMonomial> tree_coproduct(const Tree& t) {
  Tensor<ForestMonomial> out;
  out.add(TensorBasis<ForestMonomial>{ForestMonomial({t}), ForestMonomial()}, Rational(1));
  for (const auto& c : admissible_cuts(t))
    out.add(TensorBasis<ForestMonomial>{c.pruned, ForestMonomial({c.trunk})}, Rational(1));
  return out;
}

}  // namespace

Tensor<ForestMonomial> ck_coproduct(const ForestMonomial& m) {
  Tensor<ForestMonomial> out;
  out.add(TensorBasis<ForestMonomial>{ForestMonomial(), ForestMonomial()}, Rational(1));
  for (const auto& t : m.trees()) {
    Tensor<ForestMonomial> next;
    for (const auto& [ka, a] : out)
      for (const auto& [kb, b] : tree_coproduct(t))
        next.add(TensorBasis<ForestMonomial>{a.basis.left * b.basis.left, a.basis.right * b.basis.right},
                 a.coeff * b.coeff);
    out = std::move(next);
  }
  return out;
}

Rational ck_counit(const ForestMonomial& m) { return m.is_unit() ? 1 : 0; }

Integer symmetry_factor(const Tree& t) {
  if (t.flavor() != Flavor::Unordered) throw DomainError("symmetry_factor: tree must be unordered");
  return sorted_group_factor(t.children());
}

Integer symmetry_factor(const ForestMonomial& m) { return sorted_group_factor(m.trees()); }

Rational chi_pairing(const Tree& t, const ForestMonomial& a) {
  require_plain(t);
  ForestMonomial branches(b_minus(t));
  if (!(branches == a)) return 0;
  return Rational(symmetry_factor(a));
}

std::vector<ForestMonomial> enumerate_monomials(int n, std::optional<int> cap) {
  if (n < 0) throw DomainError("enumerate_monomials: negative degree");
  // a forest with n nodes is B₋ of a rooted tree with n+1 nodes
  std::vector<ForestMonomial> out;
  for (const auto& t : enumerate(TreeFamily::rooted(), n, cap)) out.emplace_back(b_minus(t));
  return out;
}

}  // namespace hopf
