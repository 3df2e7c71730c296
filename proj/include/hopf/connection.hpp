#pragma once

#include "hopf/diff_ops.hpp"

#include <span>
#include <string_view>

namespace hopf {

/// Affine connection in coordinates: Christoffel polynomials Γ^k_{ij}.
class Connection {
 public:
  /// The flat connection (all Γ zero).
  explicit Connection(std::size_t n);

  /// `{ "n": 1, "gamma": { "1,1,1": "1" } }`; keys are "i,j,k" for Γ^k_{ij}, 1-based; omitted entries are 0.
  static Connection from_json(std::string_view json_text);

  std::size_t variables() const noexcept { return n_; }
  /// Γ^k_{ij}, 0-based.
  const Polynomial& gamma(std::size_t k, std::size_t i, std::size_t j) const { return gamma_[index(k, i, j)]; }
  void set_gamma(std::size_t k, std::size_t i, std::size_t j, Polynomial value);
  bool is_flat() const;

 private:
  std::size_t index(std::size_t k, std::size_t i, std::size_t j) const { return (k * n_ + i) * n_ + j; }

  std::size_t n_;
  std::vector<Polynomial> gamma_;
};

/// ∇_E F with components Σ_μ E^μ ∂_μ F^k + Σ_{ij} Γ^k_{ij} E^i F^j.
Derivation connection_apply(const Connection& c, const Derivation& e, const Derivation& f);

/// m-th covariant differential of a function evaluated on X_1..X_m:
/// X_1((∇^{m-1}f)(X_2..X_m)) - Σ_{i≥2} (∇^{m-1}f)(X_2, .., ∇_{X_1}X_i, .., X_m).
Polynomial covariant_differential(const Polynomial& f, std::span<const Derivation> xs, const Connection& c);

/// The same recursion for a vector field: (∇^m E)(X_1..X_m), with ∇_{X_1} as the outer step.
Derivation covariant_differential(const Derivation& e, std::span<const Derivation> xs, const Connection& c);

/// Vector field of a labeled subtree: a leaf labeled E gives E; a node labeled E
/// with ordered children u_1..u_k gives (∇^k E)(θ(u_1), .., θ(u_k)).
Derivation theta(const Tree& subtree, const DerivationEnv& env, const Connection& c);

/// Action of an ordered labeled tree on f: (∇^m f)(θ(s_1), .., θ(s_m)) over the
/// root's ordered subtrees s_1..s_m.
Polynomial psi_conn_apply(const Tree& t, const DerivationEnv& env, const Connection& c, const Polynomial& f);

/// t·(ab) = Σ (t'·a)(t''·b) over the ordered coproduct of t.
bool module_algebra_check(const Tree& t, const DerivationEnv& env, const Connection& c, const Polynomial& a,
                          const Polynomial& b);

}  // namespace hopf
