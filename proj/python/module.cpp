#include "hopf/connection.hpp"
#include "hopf/connes_kreimer.hpp"
#include "hopf/grafting.hpp"
#include "hopf/permutations.hpp"
#include "hopf/shuffle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hopf;

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;
using TensorTerms = std::vector<std::pair<std::string, std::pair<std::string, std::string>>>;

template <class B>
Terms terms(const LinearCombination<B>& x) {
  Terms out;
  for (const auto& [key, term] : x) out.emplace_back(to_string(term.coeff), key);
  return out;
}

template <class B>
TensorTerms tensor_terms(const Tensor<B>& x) {
  TensorTerms out;
  for (const auto& [key, term] : x)
    out.push_back({to_string(term.coeff), {canonical_key(term.basis.left), canonical_key(term.basis.right)}});
  return out;
}

Flavor flavor_of(const std::string& name) {
  if (name == "unordered") return Flavor::Unordered;
  if (name == "ordered") return Flavor::Ordered;
  throw DomainError("flavor must be 'unordered' or 'ordered'");
}

TreeFamily family_of(const std::string& name, const std::vector<std::string>& symbols) {
  if (name == "rooted") return TreeFamily::rooted();
  if (name == "ordered") return TreeFamily::ordered();
  if (name == "hot") return TreeFamily::heap_ordered();
  if (name == "labeled") return TreeFamily::labeled(symbols);
  if (name == "labeled-ordered") return TreeFamily::labeled_ordered(symbols);
  throw DomainError("unknown tree family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_hopftrees, m) {
  m.doc() = "Exact Hopf algebra computations on trees, forests, words and permutations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("canonical_tree", [](const std::string& t, const std::string& flavor) { return parse_tree(t, flavor_of(flavor)).key(); },
        py::arg("tree"), py::arg("flavor") = "unordered");
  m.def("gl_product",
        [](const std::string& a, const std::string& b, const std::string& flavor) {
          return terms(gl_product(parse_tree(a, flavor_of(flavor)), parse_tree(b, flavor_of(flavor))));
        },
        py::arg("t1"), py::arg("t2"), py::arg("flavor") = "unordered");
  m.def("gl_coproduct",
        [](const std::string& t, const std::string& flavor) { return tensor_terms(gl_coproduct(parse_tree(t, flavor_of(flavor)))); },
        py::arg("tree"), py::arg("flavor") = "unordered");
  m.def("gl_antipode",
        [](const std::string& t, const std::string& flavor) { return terms(gl_antipode(parse_tree(t, flavor_of(flavor)))); },
        py::arg("tree"), py::arg("flavor") = "unordered");
  m.def("enumerate_trees",
        [](const std::string& family, int degree, const std::vector<std::string>& symbols) {
          std::vector<std::string> out;
          for (const auto& t : enumerate(family_of(family, symbols), degree)) out.push_back(t.key());
          return out;
        },
        py::arg("family"), py::arg("degree"), py::arg("symbols") = std::vector<std::string>{});

  m.def("ck_coproduct", [](const std::string& mono) { return tensor_terms(ck_coproduct(parse_forest_monomial(mono))); });
  m.def("chi_pairing", [](const std::string& t, const std::string& mono) {
    return to_string(chi_pairing(parse_tree(t), parse_forest_monomial(mono)));
  });

  m.def("shuffle_product", [](const std::string& u, const std::string& v) { return terms(shuffle_product(parse_word(u), parse_word(v))); });
  m.def("deconcat_coproduct", [](const std::string& w) { return tensor_terms(deconcat_coproduct(parse_word(w))); });

  m.def("heap_product", [](const std::string& s, const std::string& t) {
    return terms(heap_product(parse_permutation(s), parse_permutation(t)));
  });
  m.def("perm_coproduct", [](const std::string& p) { return tensor_terms(perm_coproduct(parse_permutation(p))); });
  m.def("relabel_rho", [](const std::string& cycles) { return canonical_key(relabel_rho(parse_cycles(cycles))); });
  m.def("perm_to_hot", [](const std::string& p) { return perm_to_hot(parse_permutation(p)).key(); });
  m.def("hot_to_perm", [](const std::string& t) { return canonical_key(hot_to_perm(parse_tree(t))); });

  m.def("psi_apply", [](const std::string& t, const std::string& env, const std::string& f) {
    auto e = DerivationEnv::from_json(env);
    return to_string(psi_apply(parse_tree(t), e, parse_polynomial(f, e.variables())));
  });
  m.def("expand_operator", [](const std::string& words, const std::string& env) {
    auto x = expand_operator(parse_word_combination(words), DerivationEnv::from_json(env));
    return py::make_tuple(to_string(x.raw_tree_count), to_string(x.cancelled()), x.surviving_trees);
  });
  m.def("psi_conn_apply", [](const std::string& t, const std::string& env, const std::string& conn, const std::string& f) {
    auto e = DerivationEnv::from_json(env);
    return to_string(psi_conn_apply(parse_tree(t, Flavor::Ordered), e, Connection::from_json(conn),
                                    parse_polynomial(f, e.variables())));
  });
  m.def("module_algebra_check",
        [](const std::string& t, const std::string& env, const std::string& conn, const std::string& a, const std::string& b) {
          auto e = DerivationEnv::from_json(env);
          return module_algebra_check(parse_tree(t, Flavor::Ordered), e, Connection::from_json(conn),
                                      parse_polynomial(a, e.variables()), parse_polynomial(b, e.variables()));
        });

  m.def("verify",
        [](const std::string& algebra, int max_degree, int product_degree, const std::string& family) {
          HopfReport r;
          if (algebra == "gl") r = verify_hopf(TreeAlgebra(family_of(family, {"E1", "E2"})), max_degree, product_degree);
          else if (algebra == "ck") r = verify_hopf(ConnesKreimer(), max_degree, product_degree);
          else if (algebra == "shuffle") r = verify_hopf(ShuffleAlgebra({{"a", 1}, {"b", 1}}), max_degree, product_degree);
          else if (algebra == "perm") r = verify_hopf(PermutationAlgebra{}, max_degree, product_degree);
          else throw DomainError("unknown algebra '" + algebra + "'");
          return py::make_tuple(r.passed(), to_text(r));
        },
        py::arg("algebra"), py::arg("max_degree"), py::arg("product_degree"), py::arg("family") = "rooted");
}
