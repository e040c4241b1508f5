#include "anagraph/dictionary.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace anagraph;

namespace {

Dictionary from_text(const std::string& text, SanitizePolicy policy = SanitizePolicy::kStrict) {
  std::istringstream in(text);
  return read_dictionary(in, "inline", policy);
}

}  // namespace

TEST_CASE("loading deduplicates and preserves first-seen order") {
  Dictionary d = from_text("able\nbale\nable\n");
  REQUIRE(d.words.size() == 2);
  CHECK(d.words[0] == "able");
  CHECK(d.words[1] == "bale");
}

TEST_CASE("uppercase folds to lowercase") {
  Dictionary d = from_text("ABLE\nBale\n");
  REQUIRE(d.words.size() == 2);
  CHECK(d.words[0] == "able");
  CHECK(d.words[1] == "bale");
}

TEST_CASE("crlf and blank lines are tolerated") {
  Dictionary d = from_text("able\r\n\r\nbale\r\n\n");
  REQUIRE(d.words.size() == 2);
  CHECK(d.words[0] == "able");
  CHECK(d.words[1] == "bale");
}

TEST_CASE("single-letter words are retained") {
  Dictionary d = from_text("a\nable\n");
  CHECK(d.words.size() == 2);
  CHECK(d.contains("a"));
}

TEST_CASE("strict policy reports the offending line") {
  CHECK_THROWS_WITH(from_text("able\nbale\nb7le\n"),
                    Catch::Matchers::ContainsSubstring("line 3"));
}

TEST_CASE("lenient policy skips and counts bad lines") {
  Dictionary d = from_text("able\nb7le\nbale\ncaf\xc3\xa9\n", SanitizePolicy::kLenient);
  REQUIRE(d.words.size() == 2);
  CHECK(d.skipped_lines == 2);
}

TEST_CASE("unreadable file is a fatal error") {
  CHECK_THROWS_AS(load_dictionary("/nonexistent/words.txt", SanitizePolicy::kStrict),
                  std::runtime_error);
}

TEST_CASE("dump then reload reproduces the dictionary") {
  Dictionary d = from_text("zebra\nable\nbale\n");
  std::ostringstream out;
  write_dictionary(d, out);
  Dictionary d2 = from_text(out.str());
  CHECK(d.words == d2.words);
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "anagraph_dict_test.txt";
  {
    std::ofstream out(path);
    out << "Able\nbale\nable\n";
  }
  Dictionary d = load_dictionary(path, SanitizePolicy::kStrict);
  CHECK(d.source_name == path.string());
  REQUIRE(d.words.size() == 2);
  std::filesystem::remove(path);
}
