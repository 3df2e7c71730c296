#pragma once

#include "hopf/hopf_algebra.hpp"
#include "hopf/trees.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hopf {

using Cycle = std::vector<std::uint32_t>;

/// Permutation of {1..n} in standard order: every fixed point is an explicit
/// 1-cycle, each cycle starts with its smallest entry, and cycles appear with
/// decreasing first entries. Elements of different S_n are distinct.
class CyclePermutation {
 public:
  /// Identity of S_0.
  CyclePermutation() = default;

  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  std::uint32_t size() const noexcept { return n_; }
  /// One-line notation: entry i-1 is the image of i.
  std::vector<std::uint32_t> images() const;

  friend bool operator==(const CyclePermutation&, const CyclePermutation&) = default;
  friend CyclePermutation standard_order(std::vector<Cycle> cycles, std::uint32_t n);

 private:
  std::vector<Cycle> cycles_;
  std::uint32_t n_ = 0;
};

/// Puts a disjoint cycle list into standard order on {1..n}, adding missing
/// fixed points. Throws DomainError on duplicate, zero or out-of-range entries.
CyclePermutation standard_order(std::vector<Cycle> cycles, std::uint32_t n);

/// `(1 3)(4)(5 7)`; "()" for the identity of S_0.
std::string canonical_key(const CyclePermutation& p);

/// Parses disjoint cycles as written, without adding fixed points.
std::vector<Cycle> parse_cycles(std::string_view text);

/// Parses cycle notation. `n` defaults to the largest entry.
CyclePermutation parse_permutation(std::string_view text, std::optional<std::uint32_t> n = std::nullopt);

/// The cycles of `p` with every entry increased by `m`, still in standard order.
std::vector<Cycle> shift(const CyclePermutation& p, std::uint32_t m);

/// Heap product σ # τ in S_{m+n}: every cycle string of σ shifted by n is placed
/// either right after one entry of τ or as a cycle of its own, (n+1)^r terms.
/// Strings sharing an attachment point follow it in standard order.
LinearCombination<CyclePermutation> heap_product(const CyclePermutation& s, const CyclePermutation& t);

/// Replaces the entries of disjoint cycles order-isomorphically by {1..k}.
CyclePermutation relabel_rho(const std::vector<Cycle>& cycles);

/// Δ(π) = Σ over subsets X of the cycles of ρ(X) ⊗ ρ(rest).
Tensor<CyclePermutation> perm_coproduct(const CyclePermutation& p);

/// Standard heap-ordered tree of a permutation: each cycle string becomes a
/// subtree below the root in which an entry hangs from the nearest smaller
/// entry to its left.
Tree perm_to_hot(const CyclePermutation& p);

/// Inverse of perm_to_hot. Throws DomainError if `t` is not standard heap-ordered.
CyclePermutation hot_to_perm(const Tree& t);

/// All of S_n in lexicographic one-line order.
std::vector<CyclePermutation> all_permutations(std::uint32_t n);

class PermutationAlgebra {
 public:
  using Basis = CyclePermutation;

  CyclePermutation unit() const { return {}; }
  LinearCombination<CyclePermutation> product(const CyclePermutation& a, const CyclePermutation& b) const {
    return heap_product(a, b);
  }
  Tensor<CyclePermutation> coproduct(const CyclePermutation& p) const { return perm_coproduct(p); }
  Rational counit(const CyclePermutation& p) const { return p.size() == 0 ? 1 : 0; }
  int degree(const CyclePermutation& p) const { return static_cast<int>(p.size()); }
  std::vector<CyclePermutation> basis(int n) const;
  std::string name() const { return "perm"; }

  /// Degree cap for basis(); matches the heap-ordered tree cap.
  static constexpr int kDefaultCap = 6;
};

}  // namespace hopf
