#include "anagraph/core.hpp"

#include <bit>

namespace anagraph {

bool is_valid_word(const Word& w) {
  for (char c : w) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

int LetterSet::size() const { return std::popcount(bits_); }

std::vector<Letter> LetterSet::letters() const {
  std::vector<Letter> out;
  for (int i = 0; i < kAlphabetSize; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(Letter(i));
  }
  return out;
}

int LetterCount::total() const {
  int sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

LetterSet LetterCount::support() const {
  LetterSet s;
  for (int i = 0; i < kAlphabetSize; ++i) {
    if (counts[i] > 0) s.insert(Letter(i));
  }
  return s;
}

std::string LetterCount::spelling() const {
  std::string out;
  for (int i = 0; i < kAlphabetSize; ++i) {
    out.append(counts[i], Letter(i).to_char());
  }
  return out;
}

std::size_t LetterCountHash::operator()(const LetterCount& lc) const {
  // FNV-1a over the count bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto c : lc.counts) {
    h = (h ^ (c & 0xff)) * 1099511628211ull;
    h = (h ^ (c >> 8)) * 1099511628211ull;
  }
  return h;
}

LetterCount letter_count(const Word& w) {
  LetterCount lc;
  for (char c : w) ++lc.counts[Letter::from_char(c).index()];
  return lc;
}

bool is_anagram(const Word& w1, const Word& w2) {
  return w1.size() == w2.size() && letter_count(w1) == letter_count(w2);
}

bool CommutationSet::add(Letter a, Letter b) {
  if (a == b) return false;
  if (commutes(a, b)) return false;
  rows_[a.index()] |= 1u << b.index();
  rows_[b.index()] |= 1u << a.index();
  return true;
}

int CommutationSet::size() const {
  int bits = 0;
  for (auto row : rows_) bits += std::popcount(row);
  return bits / 2;
}

std::vector<std::pair<Letter, Letter>> CommutationSet::pairs() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (int a = 0; a < kAlphabetSize; ++a) {
    for (int b = a + 1; b < kAlphabetSize; ++b) {
      if (commutes(Letter(a), Letter(b))) out.emplace_back(Letter(a), Letter(b));
    }
  }
  return out;
}

std::vector<std::pair<Letter, Letter>> CommutationSet::missing_pairs(int alphabet) const {
  std::vector<std::pair<Letter, Letter>> out;
  for (int a = 0; a < alphabet; ++a) {
    for (int b = a + 1; b < alphabet; ++b) {
      if (!commutes(Letter(a), Letter(b))) out.emplace_back(Letter(a), Letter(b));
    }
  }
  return out;
}

CommutationSet CommutationSet::all_pairs(int alphabet) {
  CommutationSet s;
  for (int a = 0; a < alphabet; ++a) {
    for (int b = a + 1; b < alphabet; ++b) s.add(Letter(a), Letter(b));
  }
  return s;
}

bool CommutationSet::subset_of(const CommutationSet& other) const {
  for (int i = 0; i < kAlphabetSize; ++i) {
    if (rows_[i] & ~other.rows_[i]) return false;
  }
  return true;
}

LetterSet removable_letters(const LetterCount& gamma, const CommutationSet& commuting) {
  const std::uint32_t support = gamma.support().bits();
  LetterSet out;
  for (int i = 0; i < kAlphabetSize; ++i) {
    if (!((support >> i) & 1u)) continue;
    const std::uint32_t others = support & ~(1u << i);
    if ((others & ~commuting.row(Letter(i))) == 0) out.insert(Letter(i));
  }
  return out;
}

}  // namespace anagraph
