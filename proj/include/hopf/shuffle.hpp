#pragma once

#include "hopf/hopf_algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Word over an alphabet of identifiers; the empty word is the unit.
struct Word {
  std::vector<std::string> letters;

  std::size_t length() const noexcept { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Letters joined by `.`; "1" for the empty word.
std::string canonical_key(const Word& w);

/// Accepts "", "1", or identifiers joined by `.`.
Word parse_word(std::string_view text);

struct Letter {
  std::string id;
  int degree = 1;
};
using Alphabet = std::vector<Letter>;

/// Sum over all interleavings of `u` and `v` preserving each word's order.
LinearCombination<Word> shuffle_product(const Word& u, const Word& v);

/// Deconcatenation: Σ_k prefix_k(w) ⊗ suffix_k(w).
Tensor<Word> deconcat_coproduct(const Word& w);

/// (-1)^|w| · reverse(w).
LinearCombination<Word> shuffle_antipode(const Word& w);

/// Number of words whose letter degrees sum to `total_degree`.
Integer word_count(const Alphabet& alphabet, int total_degree);

class ShuffleAlgebra {
 public:
  using Basis = Word;

  explicit ShuffleAlgebra(Alphabet alphabet);

  Word unit() const { return {}; }
  LinearCombination<Word> product(const Word& u, const Word& v) const { return shuffle_product(u, v); }
  Tensor<Word> coproduct(const Word& w) const { return deconcat_coproduct(w); }
  Rational counit(const Word& w) const { return w.letters.empty() ? 1 : 0; }
  /// Sum of letter degrees. Throws DomainError for letters outside the alphabet.
  int degree(const Word& w) const;
  std::vector<Word> basis(int n) const;
  std::string name() const { return "shuffle"; }

 private:
  Alphabet alphabet_;
};

}  // namespace hopf
