#include "hopf/permutations.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace hopf {

CyclePermutation standard_order(std::vector<Cycle> cycles, std::uint32_t n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : cycles) {
    if (c.empty()) throw DomainError("empty cycle");
    for (auto v : c) {
      if (v == 0 || v > n) throw DomainError("cycle entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (seen[v]) throw DomainError("duplicate cycle entry " + std::to_string(v));
      seen[v] = true;
    }
  }
  for (std::uint32_t v = 1; v <= n; ++v)
    if (!seen[v]) cycles.push_back({v});
  for (auto& c : cycles) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.front() > b.front(); });
  CyclePermutation p;
  p.cycles_ = std::move(cycles);
  p.n_ = n;
  return p;
}

std::vector<std::uint32_t> CyclePermutation::images() const {
  std::vector<std::uint32_t> out(n_);
  for (const auto& c : cycles_)
    for (std::size_t i = 0; i < c.size(); ++i) out[c[i] - 1] = c[(i + 1) % c.size()];
  return out;
}

std::string canonical_key(const CyclePermutation& p) {
  if (p.cycles().empty()) return "()";
  std::string out;
  for (const auto& c : p.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

std::vector<Cycle> parse_cycles(std::string_view text) {
  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    Cycle c;
    skip();
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == ',') {
        ++pos;
        skip();
        continue;
      }
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected a positive integer", pos);
      if (pos - start > 9) throw ParseError("entry too large", start);
      auto v = static_cast<std::uint32_t>(std::stoul(std::string(text.substr(start, pos - start))));
      if (v == 0) throw ParseError("cycle entries must be positive", start);
      c.push_back(v);
      skip();
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
    ++pos;
    if (!c.empty()) cycles.push_back(std::move(c));
    skip();
  }
  return cycles;
}

CyclePermutation parse_permutation(std::string_view text, std::optional<std::uint32_t> n) {
  std::vector<Cycle> cycles = parse_cycles(text);
  std::uint32_t largest = 0;
  for (const auto& c : cycles)
    for (auto v : c) largest = std::max(largest, v);
  const std::uint32_t size = n.value_or(largest);
  if (largest > size) throw ParseError("entry " + std::to_string(largest) + " exceeds n = " + std::to_string(size), 0);
  try {
    return standard_order(std::move(cycles), size);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::vector<Cycle> shift(const CyclePermutation& p, std::uint32_t m) {
  std::vector<Cycle> out = p.cycles();
  for (auto& c : out)
    for (auto& v : c) v += m;
  return out;
}

LinearCombination<CyclePermutation> heap_product(const CyclePermutation& s, const CyclePermutation& t) {
  const std::uint32_t n = t.size();
  const std::vector<Cycle> strings = shift(s, n);
  const std::size_t r = strings.size();
  const std::size_t points = static_cast<std::size_t>(n) + 1;  // entries 1..n, then the standalone point
  LinearCombination<CyclePermutation> out;
  std::vector<std::size_t> choice(r, 0);
  while (true) {
    std::vector<std::vector<std::size_t>> attached(points);
    for (std::size_t i = 0; i < r; ++i) attached[choice[i]].push_back(i);
    std::vector<Cycle> cycles;
    for (const auto& c : t.cycles()) {
      Cycle grown;
      for (auto v : c) {
        grown.push_back(v);
        for (auto i : attached[v - 1]) grown.insert(grown.end(), strings[i].begin(), strings[i].end());
      }
      cycles.push_back(std::move(grown));
    }
    for (auto i : attached[n]) cycles.push_back(strings[i]);
    out.add(standard_order(std::move(cycles), s.size() + n), Rational(1));
    std::size_t i = 0;
    while (i < r && ++choice[i] == points) choice[i++] = 0;
    if (i == r) break;
  }
  return out;
}

CyclePermutation relabel_rho(const std::vector<Cycle>& cycles) {
  std::vector<std::uint32_t> entries;
  for (const auto& c : cycles) entries.insert(entries.end(), c.begin(), c.end());
  std::sort(entries.begin(), entries.end());
  if (std::adjacent_find(entries.begin(), entries.end()) != entries.end())
    throw DomainError("relabel_rho: cycles are not disjoint");
  std::vector<Cycle> relabeled = cycles;
  for (auto& c : relabeled)
    for (auto& v : c)
      v = static_cast<std::uint32_t>(std::lower_bound(entries.begin(), entries.end(), v) - entries.begin() + 1);
  return standard_order(std::move(relabeled), static_cast<std::uint32_t>(entries.size()));
}

Tensor<CyclePermutation> perm_coproduct(const CyclePermutation& p) {
  const auto& cycles = p.cycles();
  const std::size_t k = cycles.size();
  if (k >= 32) throw DomainError("perm_coproduct: too many cycles");
  Tensor<CyclePermutation> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<Cycle> chosen, rest;
    for (std::size_t i = 0; i < k; ++i) (mask & (1u << i) ? chosen : rest).push_back(cycles[i]);
    out.add(TensorBasis<CyclePermutation>{relabel_rho(chosen), relabel_rho(rest)}, Rational(1));
  }
  return out;
}

Tree perm_to_hot(const CyclePermutation& p) {
  const std::uint32_t n = p.size();
  std::vector<std::uint32_t> parent(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& c : p.cycles())
    for (std::size_t k = 1; k < c.size(); ++k) {
      std::size_t j = k;
      while (j-- > 0)
        if (c[j] < c[k]) break;
      parent[c[k]] = c[j];  // c[0] is the cycle minimum, so j always stops
    }
  std::function<Tree(std::uint32_t)> build = [&](std::uint32_t node) {
    std::vector<Tree> kids;
    for (std::uint32_t v = 1; v <= n; ++v)
      if (parent[v] == node) kids.push_back(build(v));
    return Tree(node == 0 ? Label{} : Label::number(node), std::move(kids));
  };
  return build(0);
}

CyclePermutation hot_to_perm(const Tree& t) {
  if (!is_heap_ordered(t)) throw DomainError("hot_to_perm: tree is not a standard heap-ordered tree");
  // pre-order with children in decreasing label order
  std::function<void(const Tree&, Cycle&)> walk = [&](const Tree& node, Cycle& out) {
    out.push_back(node.label().number());
    std::vector<const Tree*> kids;
    for (const auto& c : node.children()) kids.push_back(&c);
    std::sort(kids.begin(), kids.end(),
              [](const Tree* a, const Tree* b) { return a->label().number() > b->label().number(); });
    for (const Tree* k : kids) walk(*k, out);
  };
  std::vector<Cycle> cycles;
  for (const auto& c : t.children()) {
    Cycle cycle;
    walk(c, cycle);
    cycles.push_back(std::move(cycle));
  }
  return standard_order(std::move(cycles), static_cast<std::uint32_t>(degree(t)));
}

std::vector<CyclePermutation> all_permutations(std::uint32_t n) {
  std::vector<std::uint32_t> line(n);
  std::iota(line.begin(), line.end(), 1u);
  std::vector<CyclePermutation> out;
  do {
    std::vector<bool> seen(n + 1, false);
    std::vector<Cycle> cycles;
    for (std::uint32_t start = 1; start <= n; ++start) {
      if (seen[start]) continue;
      Cycle c;
      for (std::uint32_t v = start; !seen[v]; v = line[v - 1]) {
        seen[v] = true;
        c.push_back(v);
      }
      cycles.push_back(std::move(c));
    }
    out.push_back(standard_order(std::move(cycles), n));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<CyclePermutation> PermutationAlgebra::basis(int n) const {
  if (n < 0) throw DomainError("negative degree");
  if (n > kDefaultCap) throw DomainError("permutation degree " + std::to_string(n) + " exceeds cap");
  return all_permutations(static_cast<std::uint32_t>(n));
}

}  // namespace hopf
