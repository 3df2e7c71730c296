#include "hopf/cli.hpp"

#include "hopf/connection.hpp"
#include "hopf/connes_kreimer.hpp"
#include "hopf/diff_ops.hpp"
#include "hopf/grafting.hpp"
#include "hopf/permutations.hpp"
#include "hopf/shuffle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hopf::cli {

namespace {

using nlohmann::json;

/// Verification that ran to completion but found a mismatch.
struct VerificationFailed {};

template <CanonicalBasis B>
json terms_json(const LinearCombination<B>& lc) {
  json terms = json::array();
  for (const auto& [key, term] : lc) terms.push_back({{"coeff", to_string(term.coeff)}, {"basis", key}});
  return {{"terms", terms}};
}

template <CanonicalBasis B>
json terms_json(const Tensor<B>& lc) {
  json terms = json::array();
  for (const auto& [key, term] : lc)
    terms.push_back({{"coeff", to_string(term.coeff)},
                     {"basis", json::array({canonical_key(term.basis.left), canonical_key(term.basis.right)})}});
  return {{"terms", terms}};
}

class Session {
 public:
  Session(std::ostream& out, std::istream& in) : out_(out), in_(in) {}

  bool json_output = false;

  void emit(const json& doc, const std::string& text) {
    if (json_output) out_ << doc.dump(2) << '\n';
    else out_ << text << '\n';
  }

  template <CanonicalBasis B>
  void emit(const LinearCombination<B>& lc) {
    emit(terms_json(lc), to_text(lc));
  }

  /// `-` reads the element from stdin.
  std::string element(const std::string& arg) {
    if (arg != "-") return arg;
    std::string text((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
  }

 private:
  std::ostream& out_;
  std::istream& in_;
};

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'", 0);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::optional<int> cap_from_environment() {
  if (const char* v = std::getenv("HOPF_MAX_DEGREE")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      throw ParseError("HOPF_MAX_DEGREE must be an integer", 0);
    }
  }
  return std::nullopt;
}

std::vector<std::string> split_symbols(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

TreeFamily family_from(const std::string& name, const std::string& symbols) {
  if (name == "rooted") return TreeFamily::rooted();
  if (name == "ordered") return TreeFamily::ordered();
  if (name == "hot") return TreeFamily::heap_ordered();
  auto syms = split_symbols(symbols);
  if (syms.empty()) throw ParseError("family '" + name + "' needs --symbols", 0);
  if (name == "labeled") return TreeFamily::labeled(std::move(syms));
  return TreeFamily::labeled_ordered(std::move(syms));
}

const std::vector<std::string> kFamilies{"rooted", "ordered", "hot", "labeled", "labeled-ordered"};

Tree tree_arg(Session& s, const std::string& arg, const TreeFamily& family) {
  Tree t = parse_tree(s.element(arg), family.flavor());
  if (family.kind == TreeFamily::Kind::HeapOrderedStandard && !is_heap_ordered(t))
    throw DomainError("'" + t.key() + "' is not a standard heap-ordered tree");
  return t;
}

json report_json(const HopfReport& r) {
  json axioms = json::array();
  for (const auto& a : r.axioms)
    axioms.push_back(
        {{"axiom", a.axiom}, {"passed", a.passed}, {"checks", a.checks}, {"counterexample", a.counterexample}});
  return {{"algebra", r.algebra},         {"max_degree", r.max_degree}, {"max_product_degree", r.max_product_degree},
          {"passed", r.passed()},         {"axioms", axioms}};
}

void add_format_option(CLI::App& app, std::string& format) {
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact computations in Hopf algebras of trees, forests, words and permutations", "hopf"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  add_format_option(app, format);

  Session session(out, in);
  std::function<void()> action;

  // shared option storage
  std::string a1, a2, flavor = "rooted", symbols, family = "rooted", env_path, conn_path, poly_f, poly_a, poly_b, word;
  std::vector<std::uint32_t> perm_sizes;
  int degree_arg = 0;
  bool report_only = false;

  // ---- gl
  auto* gl = app.add_subcommand("gl", "Tree (grafting) Hopf algebra");
  gl->require_subcommand(1);
  auto flavor_opt = [&](CLI::App* c) {
    c->add_option("--flavor", flavor, "Tree family")->check(CLI::IsMember(kFamilies));
    c->add_option("--symbols", symbols, "Comma-separated label symbols (labeled families)");
  };
  {
    auto* mul = gl->add_subcommand("mul", "Grafting product t1 t2");
    mul->add_option("t1", a1)->required();
    mul->add_option("t2", a2)->required();
    flavor_opt(mul);
    mul->callback([&] {
      action = [&] {
        auto fam = family_from(flavor, symbols.empty() ? "E" : symbols);
        session.emit(gl_product(tree_arg(session, a1, fam), tree_arg(session, a2, fam)));
      };
    });
    auto* cop = gl->add_subcommand("coprod", "Coproduct of a tree");
    cop->add_option("t", a1)->required();
    flavor_opt(cop);
    cop->callback([&] {
      action = [&] {
        auto fam = family_from(flavor, symbols.empty() ? "E" : symbols);
        session.emit(gl_coproduct(tree_arg(session, a1, fam)));
      };
    });
    auto* anti = gl->add_subcommand("antipode", "Antipode of a tree");
    anti->add_option("t", a1)->required();
    flavor_opt(anti);
    anti->callback([&] {
      action = [&] {
        auto fam = family_from(flavor, symbols.empty() ? "E" : symbols);
        session.emit(antipode(TreeAlgebra(fam), tree_arg(session, a1, fam)));
      };
    });
  }

  // ---- ck
  auto* ck = app.add_subcommand("ck", "Connes-Kreimer forest algebra");
  ck->require_subcommand(1);
  {
    auto* cop = ck->add_subcommand("coprod", "Admissible-cut coproduct of a forest monomial");
    cop->add_option("monomial", a1)->required();
    cop->callback([&] { action = [&] { session.emit(ck_coproduct(parse_forest_monomial(session.element(a1)))); }; });
    auto* pair = ck->add_subcommand("pair", "Duality pairing <chi(t), a>");
    pair->add_option("tree", a1)->required();
    pair->add_option("monomial", a2)->required();
    pair->callback([&] {
      action = [&] {
        Rational v = chi_pairing(parse_tree(session.element(a1)), parse_forest_monomial(session.element(a2)));
        session.emit(json{{"value", to_string(v)}}, to_string(v));
      };
    });
  }

  // ---- shuffle
  auto* sh = app.add_subcommand("shuffle", "Shuffle algebra on words");
  sh->require_subcommand(1);
  {
    auto* mul = sh->add_subcommand("mul", "Shuffle product");
    mul->add_option("u", a1)->required();
    mul->add_option("v", a2)->required();
    mul->callback([&] {
      action = [&] { session.emit(shuffle_product(parse_word(session.element(a1)), parse_word(session.element(a2)))); };
    });
    auto* cop = sh->add_subcommand("coprod", "Deconcatenation coproduct");
    cop->add_option("w", a1)->required();
    cop->callback([&] { action = [&] { session.emit(deconcat_coproduct(parse_word(session.element(a1)))); }; });
    auto* anti = sh->add_subcommand("antipode", "Antipode of a word");
    anti->add_option("w", a1)->required();
    anti->callback([&] { action = [&] { session.emit(shuffle_antipode(parse_word(session.element(a1)))); }; });
  }

  // ---- perm
  auto* perm = app.add_subcommand("perm", "Heap-product Hopf algebra of permutations");
  perm->require_subcommand(1);
  auto perm_n = [&](std::size_t i) -> std::optional<std::uint32_t> {
    if (i < perm_sizes.size()) return perm_sizes[i];
    return std::nullopt;
  };
  {
    auto n_opt = [&](CLI::App* c) {
      c->add_option("--n", perm_sizes, "Symmetric-group index per permutation argument, in order");
    };
    auto* mul = perm->add_subcommand("mul", "Heap product s # t");
    mul->add_option("s", a1)->required();
    mul->add_option("t", a2)->required();
    n_opt(mul);
    mul->callback([&] {
      action = [&] {
        session.emit(heap_product(parse_permutation(session.element(a1), perm_n(0)),
                                  parse_permutation(session.element(a2), perm_n(1))));
      };
    });
    auto* cop = perm->add_subcommand("coprod", "Cycle-subset coproduct");
    cop->add_option("p", a1)->required();
    n_opt(cop);
    cop->callback([&] { action = [&] { session.emit(perm_coproduct(parse_permutation(session.element(a1), perm_n(0)))); }; });
    auto* to_tree = perm->add_subcommand("to-tree", "Heap-ordered tree of a permutation");
    to_tree->add_option("p", a1)->required();
    n_opt(to_tree);
    to_tree->callback([&] {
      action = [&] {
        Tree t = perm_to_hot(parse_permutation(session.element(a1), perm_n(0)));
        session.emit(json{{"tree", t.key()}}, t.key());
      };
    });
    auto* from_tree = perm->add_subcommand("from-tree", "Permutation of a standard heap-ordered tree");
    from_tree->add_option("t", a1)->required();
    from_tree->callback([&] {
      action = [&] {
        std::string p = canonical_key(hot_to_perm(parse_tree(session.element(a1))));
        session.emit(json{{"permutation", p}}, p);
      };
    });
    auto* rho = perm->add_subcommand("rho", "Order-isomorphic relabeling of disjoint cycles");
    rho->add_option("cycles", a1)->required();
    rho->callback([&] {
      action = [&] {
        std::string p = canonical_key(relabel_rho(parse_cycles(session.element(a1))));
        session.emit(json{{"permutation", p}}, p);
      };
    });
  }

  // ---- trees
  auto* trees = app.add_subcommand("trees", "Tree enumeration");
  trees->require_subcommand(1);
  {
    auto fam_opts = [&](CLI::App* c) {
      c->add_option("--family", family, "Tree family")->check(CLI::IsMember(kFamilies));
      c->add_option("--degree", degree_arg, "Degree (node count minus one)")->required();
      c->add_option("--symbols", symbols, "Comma-separated label symbols (labeled families)");
    };
    auto* en = trees->add_subcommand("enum", "List all trees of a degree");
    fam_opts(en);
    en->callback([&] {
      action = [&] {
        auto list = enumerate(family_from(family, symbols), degree_arg, cap_from_environment());
        json keys = json::array();
        std::string text;
        for (const auto& t : list) {
          keys.push_back(t.key());
          text += (text.empty() ? "" : "\n") + t.key();
        }
        session.emit(json{{"trees", keys}}, text);
      };
    });
    auto* count = trees->add_subcommand("count", "Count trees of a degree");
    fam_opts(count);
    count->callback([&] {
      action = [&] {
        auto n = enumerate(family_from(family, symbols), degree_arg, cap_from_environment()).size();
        session.emit(json{{"count", n}}, std::to_string(n));
      };
    });
  }

  // ---- psi
  auto* psi = app.add_subcommand("psi", "Trees labeled by derivations acting on polynomials");
  psi->require_subcommand(1);
  {
    auto* apply = psi->add_subcommand("apply", "Apply a labeled tree to f");
    apply->add_option("--tree", a1)->required();
    apply->add_option("--env", env_path, "Derivation spec (JSON)")->required();
    apply->add_option("--f", poly_f)->required();
    apply->callback([&] {
      action = [&] {
        auto env = DerivationEnv::from_json(read_file(env_path));
        auto p = psi_apply(parse_tree(session.element(a1)), env, parse_polynomial(session.element(poly_f), env.variables()));
        session.emit(json{{"polynomial", to_string(p)}}, to_string(p));
      };
    });
    auto* expand = psi->add_subcommand("expand", "Expand a word combination into surviving trees");
    expand->add_option("--word", word)->required();
    expand->add_option("--env", env_path, "Derivation spec (JSON)")->required();
    expand->add_flag("--report", report_only, "Print only the tree counts");
    expand->callback([&] {
      action = [&] {
        auto env = DerivationEnv::from_json(read_file(env_path));
        auto ex = expand_operator(parse_word_combination(session.element(word)), env);
        std::string text = "raw_trees: " + to_string(ex.raw_tree_count) + ", cancelled: " + to_string(ex.cancelled()) +
                           ", surviving: " + std::to_string(ex.surviving_trees);
        json doc{{"raw_trees", to_string(ex.raw_tree_count)},
                 {"cancelled", to_string(ex.cancelled())},
                 {"surviving", ex.surviving_trees}};
        if (!report_only) {
          json terms = json::array();
          for (const auto& t : ex.terms) {
            terms.push_back({{"coeff", to_string(t.coeff)},
                             {"basis", t.tree.key()},
                             {"description", t.description},
                             {"index_terms", t.index_terms}});
            text += "\n" + to_string(t.coeff) + "  " + t.tree.key() + "  " + t.description;
          }
          doc["terms"] = terms;
        }
        session.emit(doc, text);
      };
    });
    auto* diagram = psi->add_subcommand("check-diagram", "Compare the tree route with nested derivations");
    diagram->add_option("--word", word)->required();
    diagram->add_option("--env", env_path, "Derivation spec (JSON)")->required();
    diagram->add_option("--f", poly_f)->required();
    diagram->callback([&] {
      action = [&] {
        auto env = DerivationEnv::from_json(read_file(env_path));
        auto combo = parse_word_combination(session.element(word));
        if (combo.terms.size() != 1 || combo.terms[0].first != 1)
          throw ParseError("check-diagram takes a single word such as E1,E2", 0);
        auto r = commuting_diagram_check(combo.terms[0].second, env,
                                         parse_polynomial(session.element(poly_f), env.variables()));
        session.emit(json{{"commutes", r.commutes},
                          {"via_trees", to_string(r.via_trees)},
                          {"via_composition", to_string(r.via_composition)}},
                     std::string(r.commutes ? "commutes" : "MISMATCH") + ": " + to_string(r.via_trees) +
                         (r.commutes ? " == " : " != ") + to_string(r.via_composition));
        if (!r.commutes) throw VerificationFailed{};
      };
    });
  }

  // ---- conn
  auto* conn = app.add_subcommand("conn", "Ordered labeled trees acting through a connection");
  conn->require_subcommand(1);
  {
    auto* apply = conn->add_subcommand("apply", "Apply an ordered labeled tree to f");
    apply->add_option("--tree", a1)->required();
    apply->add_option("--env", env_path)->required();
    apply->add_option("--conn", conn_path)->required();
    apply->add_option("--f", poly_f)->required();
    apply->callback([&] {
      action = [&] {
        auto env = DerivationEnv::from_json(read_file(env_path));
        auto c = Connection::from_json(read_file(conn_path));
        auto p = psi_conn_apply(parse_tree(session.element(a1), Flavor::Ordered), env, c,
                                parse_polynomial(session.element(poly_f), env.variables()));
        session.emit(json{{"polynomial", to_string(p)}}, to_string(p));
      };
    });
    auto* check = conn->add_subcommand("check-module", "Check t(ab) = sum (t'a)(t''b)");
    check->add_option("--tree", a1)->required();
    check->add_option("--env", env_path)->required();
    check->add_option("--conn", conn_path)->required();
    check->add_option("--a", poly_a)->required();
    check->add_option("--b", poly_b)->required();
    check->callback([&] {
      action = [&] {
        auto env = DerivationEnv::from_json(read_file(env_path));
        auto c = Connection::from_json(read_file(conn_path));
        bool ok = module_algebra_check(parse_tree(session.element(a1), Flavor::Ordered), env, c,
                                       parse_polynomial(session.element(poly_a), env.variables()),
                                       parse_polynomial(session.element(poly_b), env.variables()));
        session.emit(json{{"holds", ok}}, ok ? "holds" : "FAILS");
        if (!ok) throw VerificationFailed{};
      };
    });
  }

  // ---- verify
  std::string algebra = "gl", letters = "x1,x2";
  int max_degree = 3, product_degree = -1;
  auto* verify = app.add_subcommand("verify", "Exhaustive Hopf axiom sweep");
  verify->add_option("--algebra", algebra)->check(CLI::IsMember({"gl", "ck", "shuffle", "perm"}));
  verify->add_option("--max-degree", max_degree)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--product-degree", product_degree, "Total-degree bound for products (default: max degree)");
  verify->add_option("--flavor", flavor, "Tree family for --algebra gl")->check(CLI::IsMember(kFamilies));
  verify->add_option("--symbols", symbols, "Label symbols for labeled families");
  verify->add_option("--letters", letters, "Alphabet for --algebra shuffle");
  verify->callback([&] {
    action = [&] {
      const int pd = product_degree < 0 ? max_degree : product_degree;
      const auto cap = cap_from_environment();
      HopfReport r;
      if (algebra == "gl") {
        r = verify_hopf(TreeAlgebra(family_from(flavor, symbols), cap), max_degree, pd);
      } else if (algebra == "ck") {
        r = verify_hopf(ConnesKreimer(cap), max_degree, pd);
      } else if (algebra == "shuffle") {
        Alphabet alpha;
        for (auto& l : split_symbols(letters)) alpha.push_back({l, 1});
        r = verify_hopf(ShuffleAlgebra(alpha), max_degree, pd);
      } else {
        if (std::max(max_degree, pd) > cap.value_or(PermutationAlgebra::kDefaultCap))
          throw DomainError("permutation degree exceeds cap");
        r = verify_hopf(PermutationAlgebra{}, max_degree, pd);
      }
      std::string text = to_text(r);
      text.pop_back();
      session.emit(report_json(r), text);
      if (!r.passed()) throw VerificationFailed{};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    session.json_output = format == "json";
    action();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitParseError;
  } catch (const VerificationFailed&) {
    return kExitVerificationFailed;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
}

}  // namespace hopf::cli
