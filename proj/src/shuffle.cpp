#include "hopf/shuffle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace hopf {

std::string canonical_key(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) out += (i ? "." : "") + w.letters[i];
  return out;
}

Word parse_word(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  std::size_t last = text.find_last_not_of(" \t");
  std::string_view body = text.substr(first, last - first + 1);
  if (body == "1") return {};
  Word w;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = body.find('.', start);
    auto letter = body.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (letter.empty() || !(std::isalpha(static_cast<unsigned char>(letter[0])) || letter[0] == '_'))
      throw ParseError("letter must start with a letter or '_'", first + start);
    for (std::size_t i = 0; i < letter.size(); ++i)
      if (!(std::isalnum(static_cast<unsigned char>(letter[i])) || letter[i] == '_'))
        throw ParseError("invalid character in letter", first + start + i);
    w.letters.emplace_back(letter);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return w;
}

LinearCombination<Word> shuffle_product(const Word& u, const Word& v) {
  LinearCombination<Word> out;
  Word current;
  std::function<void(std::size_t, std::size_t)> interleave = [&](std::size_t i, std::size_t j) {
    if (i == u.length() && j == v.length()) {
      out.add(current, Rational(1));
      return;
    }
    if (i < u.length()) {
      current.letters.push_back(u.letters[i]);
      interleave(i + 1, j);
      current.letters.pop_back();
    }
    if (j < v.length()) {
      current.letters.push_back(v.letters[j]);
      interleave(i, j + 1);
      current.letters.pop_back();
    }
  };
  interleave(0, 0);
  return out;
}

Tensor<Word> deconcat_coproduct(const Word& w) {
  Tensor<Word> out;
  for (std::size_t k = 0; k <= w.length(); ++k) {
    Word prefix{{w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(k)}};
    Word suffix{{w.letters.begin() + static_cast<std::ptrdiff_t>(k), w.letters.end()}};
    out.add(TensorBasis<Word>{std::move(prefix), std::move(suffix)}, Rational(1));
  }
  return out;
}

LinearCombination<Word> shuffle_antipode(const Word& w) {
  Word reversed{{w.letters.rbegin(), w.letters.rend()}};
  return LinearCombination<Word>(std::move(reversed), w.length() % 2 ? Rational(-1) : Rational(1));
}

Integer word_count(const Alphabet& alphabet, int total_degree) {
  if (total_degree < 0) throw DomainError("word_count: negative degree");
  for (const auto& l : alphabet)
    if (l.degree <= 0) throw DomainError("word_count: letter degrees must be positive");
  // count[n] = Σ_letters count[n - deg(letter)]
  std::vector<Integer> count(static_cast<std::size_t>(total_degree) + 1, 0);
  count[0] = 1;
  for (int n = 1; n <= total_degree; ++n)
    for (const auto& l : alphabet)
      if (l.degree <= n) count[n] += count[n - l.degree];
  return count[total_degree];
}

ShuffleAlgebra::ShuffleAlgebra(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  for (const auto& l : alphabet_)
    if (l.degree <= 0) throw DomainError("shuffle alphabet: letter degrees must be positive");
}

int ShuffleAlgebra::degree(const Word& w) const {
  int d = 0;
  for (const auto& letter : w.letters) {
    auto it = std::find_if(alphabet_.begin(), alphabet_.end(), [&](const Letter& l) { return l.id == letter; });
    if (it == alphabet_.end()) throw DomainError("letter '" + letter + "' is not in the alphabet");
    d += it->degree;
  }
  return d;
}

std::vector<Word> ShuffleAlgebra::basis(int n) const {
  std::vector<Word> out;
  Word current;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (const auto& l : alphabet_)
      if (l.degree <= remaining) {
        current.letters.push_back(l.id);
        extend(remaining - l.degree);
        current.letters.pop_back();
      }
  };
  if (n >= 0) extend(n);
  return out;
}

}  // namespace hopf
