#include "anagraph/core.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"

using namespace anagraph;
using testutil::L;

TEST_CASE("letter_count counts multiplicities") {
  LetterCount lc = letter_count("able");
  CHECK(lc[L('a')] == 1);
  CHECK(lc[L('b')] == 1);
  CHECK(lc[L('e')] == 1);
  CHECK(lc[L('l')] == 1);
  CHECK(lc[L('z')] == 0);
  CHECK(lc.total() == 4);

  CHECK(letter_count("").total() == 0);
  CHECK(letter_count("") == LetterCount{});

  LetterCount deed = letter_count("deed");
  CHECK(deed[L('d')] == 2);
  CHECK(deed[L('e')] == 2);
  CHECK(deed.total() == 4);
  CHECK(deed.spelling() == "ddee");
}

TEST_CASE("is_anagram compares letter counts") {
  CHECK(is_anagram("able", "bale"));
  CHECK(is_anagram("able", "albe"));
  CHECK_FALSE(is_anagram("cat", "dog"));
  CHECK_FALSE(is_anagram("aa", "a"));
  CHECK(is_anagram("", ""));
}

TEST_CASE("letter_count is permutation invariant") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = testutil::random_word(rng, 6, 0, 12);
    Word p = testutil::shuffled(rng, w);
    CHECK(letter_count(w) == letter_count(p));
    CHECK(is_anagram(w, p));
  }
}

TEST_CASE("commutation set is symmetric and irreflexive") {
  std::mt19937 rng(11);
  CommutationSet s = testutil::random_commset(rng, kAlphabetSize, 0.3);
  s.add(L('q'), L('q'));  // self-pairs are never stored
  for (int a = 0; a < kAlphabetSize; ++a) {
    for (int b = 0; b < kAlphabetSize; ++b) {
      CHECK(s.commutes(Letter(a), Letter(b)) == s.commutes(Letter(b), Letter(a)));
      if (a == b) CHECK_FALSE(s.commutes(Letter(a), Letter(b)));
    }
  }
  CHECK(static_cast<int>(s.pairs().size()) == s.size());
  CHECK(s.size() + static_cast<int>(s.missing_pairs().size()) == 325);
}

TEST_CASE("all_pairs covers every unordered pair") {
  CommutationSet full = CommutationSet::all_pairs();
  CHECK(full.size() == 325);
  CHECK(full.missing_pairs().empty());
  CommutationSet small = CommutationSet::all_pairs(4);
  CHECK(small.size() == 6);
}

TEST_CASE("removable_letters follows the commutation set") {
  LetterCount able = letter_count("able");

  LetterSet all = removable_letters(able, CommutationSet::all_pairs());
  CHECK(all.size() == 4);
  CHECK(all.contains(L('a')));
  CHECK(all.contains(L('b')));
  CHECK(all.contains(L('e')));
  CHECK(all.contains(L('l')));

  CHECK(removable_letters(able, CommutationSet{}).empty());

  // A letter alone in the support is vacuously removable.
  LetterSet solo = removable_letters(letter_count("aa"), CommutationSet{});
  CHECK(solo.size() == 1);
  CHECK(solo.contains(L('a')));
}

TEST_CASE("removable_letters example with a partial set") {
  // a commutes with all of b, l, e; nothing else does.
  CommutationSet s = testutil::commset("ab,al,ae");
  LetterSet r = removable_letters(letter_count("able"), s);
  CHECK(r.size() == 1);
  CHECK(r.contains(L('a')));
  // Dropping one pair makes a stick as well.
  CHECK(removable_letters(letter_count("able"), testutil::commset("ab,al")).empty());
}

TEST_CASE("removable_letters is monotone in the commutation set") {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    Word w = testutil::random_word(rng, 8, 1, 10);
    CommutationSet small = testutil::random_commset(rng, 8, 0.4);
    CommutationSet big = small;
    CommutationSet extra = testutil::random_commset(rng, 8, 0.3);
    for (auto [a, b] : extra.pairs()) big.add(a, b);
    REQUIRE(small.subset_of(big));
    LetterSet rs = removable_letters(letter_count(w), small);
    LetterSet rb = removable_letters(letter_count(w), big);
    CHECK((rs.bits() & ~rb.bits()) == 0u);
  }
}

TEST_CASE("letter and letter set basics") {
  CHECK(L('a').index() == 0);
  CHECK(L('z').index() == 25);
  CHECK(Letter(3).to_char() == 'd');
  CHECK(L('a') < L('b'));

  LetterSet s;
  CHECK(s.empty());
  s.insert(L('c'));
  s.insert(L('a'));
  CHECK(s.size() == 2);
  auto letters = s.letters();
  REQUIRE(letters.size() == 2);
  CHECK(letters[0] == L('a'));
  CHECK(letters[1] == L('c'));

  CHECK(letter_count("banana").support().size() == 3);
  CHECK(is_valid_word("banana"));
  CHECK_FALSE(is_valid_word("ba nana"));
  CHECK_FALSE(is_valid_word("Banana"));
}
