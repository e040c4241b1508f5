#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anagraph/core.hpp"
#include "anagraph/dictionary.hpp"

namespace testutil {

inline anagraph::Letter L(char c) { return anagraph::Letter::from_char(c); }

// "ab,cd" -> commutation set {(a,b),(c,d)}
inline anagraph::CommutationSet commset(const std::string& spec) {
  anagraph::CommutationSet s;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() == 2) s.add(L(item[0]), L(item[1]));
  }
  return s;
}

// Every unordered pair among the given letters.
inline anagraph::CommutationSet clique(const std::string& letters) {
  anagraph::CommutationSet s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      s.add(L(letters[i]), L(letters[j]));
    }
  }
  return s;
}

inline anagraph::Dictionary dict(std::initializer_list<const char*> words,
                                 std::string name = "test") {
  anagraph::Dictionary d;
  d.source_name = std::move(name);
  for (const char* w : words) d.words.emplace_back(w);
  return d;
}

inline anagraph::Word random_word(std::mt19937& rng, int alphabet, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> letter(0, alphabet - 1);
  anagraph::Word w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(anagraph::Letter(letter(rng)).to_char());
  return w;
}

inline anagraph::Word shuffled(std::mt19937& rng, anagraph::Word w) {
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

inline anagraph::CommutationSet random_commset(std::mt19937& rng, int alphabet, double density) {
  std::bernoulli_distribution coin(density);
  anagraph::CommutationSet s;
  for (int a = 0; a < alphabet; ++a) {
    for (int b = a + 1; b < alphabet; ++b) {
      if (coin(rng)) s.add(anagraph::Letter(a), anagraph::Letter(b));
    }
  }
  return s;
}

}  // namespace testutil
