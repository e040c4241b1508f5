#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "anagraph/core.hpp"

namespace anagraph {

// Under strict sanitizing an unusable line aborts the load with its line
// number; under lenient it is skipped and counted.
enum class SanitizePolicy { kStrict, kLenient };

struct Dictionary {
  std::vector<Word> words;  // deduplicated, first-seen order, lowercase a-z
  std::string source_name;
  std::size_t skipped_lines = 0;

  bool contains(const Word& w) const;
};

// One word per line, LF or CRLF, UTF-8. ASCII uppercase folds to lowercase;
// blank lines are ignored. Throws std::runtime_error on unreadable files and
// on malformed lines under the strict policy.
Dictionary load_dictionary(const std::filesystem::path& path, SanitizePolicy policy);
Dictionary read_dictionary(std::istream& in, std::string source_name, SanitizePolicy policy);

// One word per line; reloading the output reproduces the Dictionary.
void write_dictionary(const Dictionary& d, std::ostream& out);

}  // namespace anagraph
