#include "hopf/connection.hpp"

#include <json.hpp>

#include <sstream>

namespace hopf {

Connection::Connection(std::size_t n) : n_(n), gamma_(n * n * n, Polynomial(n)) {}

void Connection::set_gamma(std::size_t k, std::size_t i, std::size_t j, Polynomial value) {
  if (k >= n_ || i >= n_ || j >= n_) throw DomainError("Christoffel index out of range");
  if (value.variables() != n_) throw DomainError("Christoffel symbol has the wrong variable count");
  gamma_[index(k, i, j)] = std::move(value);
}

bool Connection::is_flat() const {
  for (const auto& g : gamma_)
    if (!g.is_zero()) return false;
  return true;
}

Connection Connection::from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("connection spec: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0)
    throw ParseError("connection spec needs a positive integer \"n\"", 0);
  const auto n = doc["n"].get<std::size_t>();
  Connection c(n);
  if (!doc.contains("gamma")) return c;
  if (!doc["gamma"].is_object()) throw ParseError("\"gamma\" must be an object", 0);
  for (const auto& [key, value] : doc["gamma"].items()) {
    std::istringstream in(key);
    std::size_t idx[3];
    char sep1 = 0, sep2 = 0;
    if (!(in >> idx[0] >> sep1 >> idx[1] >> sep2 >> idx[2]) || sep1 != ',' || sep2 != ',' || !in.eof())
      throw ParseError("gamma key '" + key + "' must look like \"i,j,k\"", 0);
    for (auto v : idx)
      if (v == 0 || v > n) throw ParseError("gamma key '" + key + "' out of range", 0);
    Polynomial p = value.is_string() ? parse_polynomial(value.get<std::string>(), n)
                   : value.is_number_integer() ? Polynomial::constant(n, Rational(value.get<long long>()))
                                               : throw ParseError("gamma values must be polynomial strings", 0);
    c.set_gamma(idx[2] - 1, idx[0] - 1, idx[1] - 1, std::move(p));
  }
  return c;
}

Derivation connection_apply(const Connection& c, const Derivation& e, const Derivation& f) {
  const std::size_t n = c.variables();
  if (e.variables() != n || f.variables() != n) throw DomainError("connection_apply: dimension mismatch");
  Derivation out;
  out.coeffs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial comp = derivation_apply(e, f.coeffs[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (e.coeffs[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& g = c.gamma(k, i, j);
        if (!g.is_zero()) comp += g * e.coeffs[i] * f.coeffs[j];
      }
    }
    out.coeffs.push_back(std::move(comp));
  }
  return out;
}

namespace {

Derivation operator-(const Derivation& a, const Derivation& b) {
  Derivation out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

// Shared recursion for ∇^m of a function or a vector field; `step(x, v)` is ∇_x v.
template <class Value, class Step>
Value covariant_recursion(const Value& base, std::span<const Derivation> xs, const Connection& c, Step step) {
  if (xs.empty()) return base;
  const Derivation& first = xs.front();
  std::vector<Derivation> rest(xs.begin() + 1, xs.end());
  Value out = step(first, covariant_recursion(base, std::span<const Derivation>(rest), c, step));
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<Derivation> moved = rest;
    moved[i] = connection_apply(c, first, rest[i]);
    Value correction = covariant_recursion(base, std::span<const Derivation>(moved), c, step);
    out = out - correction;
  }
  return out;
}

}  // namespace

Polynomial covariant_differential(const Polynomial& f, std::span<const Derivation> xs, const Connection& c) {
  for (const auto& x : xs)
    if (x.variables() != c.variables()) throw DomainError("covariant_differential: dimension mismatch");
  if (f.variables() != c.variables()) throw DomainError("covariant_differential: dimension mismatch");
  return covariant_recursion(f, xs, c, [](const Derivation& x, const Polynomial& g) { return derivation_apply(x, g); });
}

Derivation covariant_differential(const Derivation& e, std::span<const Derivation> xs, const Connection& c) {
  if (e.variables() != c.variables()) throw DomainError("covariant_differential: dimension mismatch");
  return covariant_recursion(e, xs, c, [&](const Derivation& x, const Derivation& v) { return connection_apply(c, x, v); });
}

Derivation theta(const Tree& subtree, const DerivationEnv& env, const Connection& c) {
  if (!subtree.label().is_symbol()) throw DomainError("theta: unlabeled node below the root");
  if (env.variables() != c.variables()) throw DomainError("theta: dimension mismatch");
  std::vector<Derivation> args;
  for (const auto& child : subtree.children()) args.push_back(theta(child, env, c));
  return covariant_differential(env.at(subtree.label().symbol()), args, c);
}

Polynomial psi_conn_apply(const Tree& t, const DerivationEnv& env, const Connection& c, const Polynomial& f) {
  if (!t.label().is_none()) throw DomainError("psi_conn_apply: root must be unlabeled");
  std::vector<Derivation> args;
  for (const auto& child : t.children()) args.push_back(theta(child, env, c));
  return covariant_differential(f, args, c);
}

bool module_algebra_check(const Tree& t, const DerivationEnv& env, const Connection& c, const Polynomial& a,
                          const Polynomial& b) {
  const Polynomial lhs = psi_conn_apply(t, env, c, a * b);
  Polynomial rhs(a.variables());
  for (const auto& [key, term] : gl_coproduct(t))
    rhs += term.coeff * (psi_conn_apply(term.basis.left, env, c, a) * psi_conn_apply(term.basis.right, env, c, b));
  return lhs == rhs;
}

}  // namespace hopf
