#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace anagraph {

inline constexpr int kAlphabetSize = 26;

// A generator index in [0, 26). Words store plain lowercase chars; Letter is
// the typed index used by commutation tables, witnesses and reports, so that
// 'a' (the char) and 0 (the index) cannot be mixed up silently.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(int index) : index_(static_cast<std::uint8_t>(index)) {}
  static constexpr Letter from_char(char c) { return Letter(c - 'a'); }
  constexpr int index() const { return index_; }
  constexpr char to_char() const { return static_cast<char>('a' + index_); }
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint8_t index_ = 0;
};

// A positive word in the generators: lowercase a-z, no inverses.
using Word = std::string;

bool is_valid_word(const Word& w);

// Subset of the alphabet, as a bitmask.
class LetterSet {
 public:
  constexpr LetterSet() = default;
  constexpr explicit LetterSet(std::uint32_t bits) : bits_(bits) {}

  constexpr bool contains(Letter l) const { return (bits_ >> l.index()) & 1u; }
  constexpr void insert(Letter l) { bits_ |= 1u << l.index(); }
  constexpr void merge(LetterSet other) { bits_ |= other.bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  constexpr std::uint32_t bits() const { return bits_; }
  std::vector<Letter> letters() const;  // ascending
  friend constexpr bool operator==(LetterSet, LetterSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Multiplicity of each generator in a word: the image of the word in Z^26
// and the key under which anagrams collide.
struct LetterCount {
  std::array<std::uint16_t, kAlphabetSize> counts{};

  std::uint16_t operator[](Letter l) const { return counts[l.index()]; }
  std::uint16_t& operator[](Letter l) { return counts[l.index()]; }
  int total() const;
  LetterSet support() const;
  bool zero() const { return total() == 0; }
  // Letters in alphabetical order with multiplicity, e.g. "aabel" for "able"+"a".
  std::string spelling() const;

  friend bool operator==(const LetterCount&, const LetterCount&) = default;
  friend auto operator<=>(const LetterCount&, const LetterCount&) = default;
};

struct LetterCountHash {
  std::size_t operator()(const LetterCount& lc) const;
};

LetterCount letter_count(const Word& w);
bool is_anagram(const Word& w1, const Word& w2);

// Symmetric, irreflexive relation on the generators recording which pairs
// are known to commute. At most 325 unordered pairs over the full alphabet.
class CommutationSet {
 public:
  bool commutes(Letter a, Letter b) const {
    return (rows_[a.index()] >> b.index()) & 1u;
  }
  // Stores both orientations; (a, a) is never stored. Returns true if new.
  bool add(Letter a, Letter b);
  int size() const;
  bool empty() const { return size() == 0; }
  std::uint32_t row(Letter a) const { return rows_[a.index()]; }

  // Canonical (a < b) pairs, sorted.
  std::vector<std::pair<Letter, Letter>> pairs() const;
  std::vector<std::pair<Letter, Letter>> missing_pairs(int alphabet = kAlphabetSize) const;
  static CommutationSet all_pairs(int alphabet = kAlphabetSize);
  bool subset_of(const CommutationSet& other) const;

  friend bool operator==(const CommutationSet&, const CommutationSet&) = default;

 private:
  std::array<std::uint32_t, kAlphabetSize> rows_{};
};

// Letters of gamma's support that commute with every other supported letter.
// A letter alone in the support is always removable.
LetterSet removable_letters(const LetterCount& gamma, const CommutationSet& commuting);

}  // namespace anagraph
