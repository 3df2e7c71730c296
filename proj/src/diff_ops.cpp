#include "hopf/diff_ops.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace hopf {

Derivation operator+(const Derivation& a, const Derivation& b) {
  if (a.variables() != b.variables()) throw DomainError("derivation variable counts differ");
  Derivation out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

Derivation operator*(const Polynomial& f, const Derivation& e) {
  Derivation out = e;
  for (auto& c : out.coeffs) c = f * c;
  return out;
}

Polynomial derivation_apply(const Derivation& e, const Polynomial& f) {
  if (e.variables() != f.variables()) throw DomainError("derivation_apply: dimension mismatch");
  Polynomial out(f.variables());
  for (std::size_t mu = 0; mu < e.variables(); ++mu) out += e.coeffs[mu] * poly_derivative(f, mu);
  return out;
}

namespace {

Polynomial parse_json_poly(const nlohmann::json& value, std::size_t n) {
  if (value.is_string()) return parse_polynomial(value.get<std::string>(), n);
  if (value.is_number_integer()) return Polynomial::constant(n, Rational(value.get<long long>()));
  throw ParseError("expected a polynomial string", 0);
}

}  // namespace

DerivationEnv DerivationEnv::from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("derivation spec: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0)
    throw ParseError("derivation spec needs a positive integer \"n\"", 0);
  const auto n = doc["n"].get<std::size_t>();
  DerivationEnv env(n);
  for (const auto& [symbol, coeffs] : doc.items()) {
    if (symbol == "n") continue;
    if (!coeffs.is_array() || coeffs.size() != n)
      throw ParseError("derivation " + symbol + " must list " + std::to_string(n) + " coefficients", 0);
    Derivation e;
    for (const auto& c : coeffs) e.coeffs.push_back(parse_json_poly(c, n));
    env.define(symbol, std::move(e));
  }
  return env;
}

void DerivationEnv::define(const std::string& symbol, Derivation e) {
  if (e.variables() != n_) throw DomainError("derivation " + symbol + " has the wrong variable count");
  for (const auto& c : e.coeffs)
    if (c.variables() != n_) throw DomainError("derivation " + symbol + " has the wrong variable count");
  table_.insert_or_assign(symbol, std::move(e));
}

const Derivation& DerivationEnv::at(const std::string& symbol) const {
  auto it = table_.find(symbol);
  if (it == table_.end()) throw DomainError("unknown label '" + symbol + "'");
  return it->second;
}

namespace {

struct NumberedTree {
  std::vector<const Tree*> nodes;            // pre-order; 0 is the root
  std::vector<std::vector<std::size_t>> kids;
};

NumberedTree number_nodes(const Tree& t) {
  NumberedTree out;
  out.nodes = preorder(t);
  std::unordered_map<const Tree*, std::size_t> id;
  for (std::size_t i = 0; i < out.nodes.size(); ++i) id[out.nodes[i]] = i;
  out.kids.resize(out.nodes.size());
  for (std::size_t i = 0; i < out.nodes.size(); ++i)
    for (const auto& c : out.nodes[i]->children()) out.kids[i].push_back(id.at(&c));
  return out;
}

Polynomial differentiate(Polynomial p, const std::vector<std::size_t>& kids, const std::vector<std::size_t>& index) {
  for (auto c : kids) {
    if (p.is_zero()) break;
    p = poly_derivative(p, index[c]);
  }
  return p;
}

}  // namespace

Polynomial psi_apply(const Tree& t, const DerivationEnv& env, const Polynomial& f) {
  if (f.variables() != env.variables()) throw DomainError("psi_apply: dimension mismatch");
  if (!t.label().is_none()) throw DomainError("psi_apply: root must be unlabeled");
  const auto numbered = number_nodes(t);
  const std::size_t k = numbered.nodes.size() - 1;
  const std::size_t n = env.variables();
  std::vector<const Derivation*> label(k + 1, nullptr);
  for (std::size_t j = 1; j <= k; ++j) {
    const Label& l = numbered.nodes[j]->label();
    if (!l.is_symbol()) throw DomainError("psi_apply: non-root node without a derivation label");
    label[j] = &env.at(l.symbol());
  }

  Polynomial sum(n);
  std::vector<std::size_t> index(k + 1, 0);
  while (true) {
    Polynomial term = differentiate(f, numbered.kids[0], index);
    for (std::size_t j = 1; j <= k && !term.is_zero(); ++j)
      term = term * differentiate(label[j]->coeffs[index[j]], numbered.kids[j], index);
    sum += term;
    std::size_t j = 1;
    while (j <= k && ++index[j] == n) index[j++] = 0;
    if (j > k) break;
  }
  return sum;
}

Polynomial psi_apply(const LinearCombination<Tree>& c, const DerivationEnv& env, const Polynomial& f) {
  Polynomial sum(env.variables());
  for (const auto& [key, term] : c) sum += term.coeff * psi_apply(term.basis, env, f);
  return sum;
}

WordCombination parse_word_combination(std::string_view text) {
  WordCombination out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto identifier = [&] {
    skip();
    const std::size_t start = pos;
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      throw ParseError("expected a symbol", pos);
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    return std::string(text.substr(start, pos - start));
  };
  skip();
  if (pos == text.size()) throw ParseError("empty word combination", pos);
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    Rational coeff = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') coeff = -1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      coeff *= parse_rational(text.substr(start, pos - start));
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        // a bare scalar is the empty word
        out.terms.emplace_back(coeff, SymbolWord{});
        first = false;
        continue;
      }
    }
    SymbolWord word{identifier()};
    skip();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      word.push_back(identifier());
      skip();
    }
    out.terms.emplace_back(coeff, std::move(word));
    first = false;
  }
  return out;
}

LinearCombination<Tree> word_to_trees(const SymbolWord& word) {
  LinearCombination<Tree> acc{Tree()};
  for (const auto& symbol : word) {
    LinearCombination<Tree> generator{Tree(Label{}, {Tree(Label::symbol(symbol), {})})};
    acc = bilinear_map(acc, generator, gl_product);
  }
  return acc;
}

LinearCombination<Tree> word_to_trees(const SymbolWord& word, const DerivationEnv& env) {
  for (const auto& symbol : word) env.at(symbol);
  return word_to_trees(word);
}

std::string describe_operator(const Tree& t) {
  const auto numbered = number_nodes(t);
  const std::size_t k = numbered.nodes.size() - 1;
  auto index_name = [](std::size_t j) { return "i" + std::to_string(j); };
  auto partials = [&](std::size_t node) {
    std::string out;
    for (auto c : numbered.kids[node]) out += "D_{" + index_name(c) + "} ";
    return out;
  };
  std::string out;
  if (k > 0) {
    out = "Σ_{";
    for (std::size_t j = 1; j <= k; ++j) out += (j > 1 ? "," : "") + index_name(j);
    out += "} ";
  }
  for (std::size_t j = k; j >= 1; --j) {
    std::string coeff = "a[" + numbered.nodes[j]->label().text() + "]^{" + index_name(j) + "}";
    out += numbered.kids[j].empty() ? coeff : "(" + partials(j) + coeff + ")";
    out += " ";
  }
  return out + partials(0) + "f";
}

namespace {

OperatorExpansion summarize(const LinearCombination<Tree>& merged, Rational raw, const DerivationEnv& env) {
  OperatorExpansion out;
  out.raw_tree_count = std::move(raw);
  out.surviving_trees = merged.size();
  out.surviving_multiplicity = merged.total_multiplicity();
  for (const auto& [key, term] : merged) {
    std::size_t assignments = 1;
    for (int i = 0; i < degree(term.basis); ++i) assignments *= env.variables();
    out.terms.push_back(ExpandedTree{term.basis, term.coeff, describe_operator(term.basis), assignments});
  }
  return out;
}

void check_labels(const Tree& t, const DerivationEnv& env) {
  for (const Tree* node : preorder(t))
    if (node != &t) {
      if (!node->label().is_symbol()) throw DomainError("non-root node without a derivation label");
      env.at(node->label().symbol());
    }
}

}  // namespace

OperatorExpansion expand_operator(const WordCombination& words, const DerivationEnv& env) {
  LinearCombination<Tree> merged;
  Rational raw = 0;
  for (const auto& [coeff, word] : words.terms) {
    auto trees = word_to_trees(word, env);
    raw += abs(coeff) * trees.total_multiplicity();
    merged.add(trees, coeff);
  }
  return summarize(merged, raw, env);
}

OperatorExpansion expand_operator(const LinearCombination<Tree>& trees, const DerivationEnv& env) {
  for (const auto& [key, term] : trees) check_labels(term.basis, env);
  return summarize(trees, trees.total_multiplicity(), env);
}

DiagramCheck commuting_diagram_check(const SymbolWord& word, const DerivationEnv& env, const Polynomial& f) {
  DiagramCheck out;
  out.via_trees = psi_apply(word_to_trees(word, env), env, f);
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = derivation_apply(env.at(*it), g);
  out.via_composition = std::move(g);
  out.commutes = out.via_trees == out.via_composition;
  return out;
}

}  // namespace hopf
