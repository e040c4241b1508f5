#include "anagraph/dictionary.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace anagraph {

bool Dictionary::contains(const Word& w) const {
  return std::find(words.begin(), words.end(), w) != words.end();
}

Dictionary load_dictionary(const std::filesystem::path& path, SanitizePolicy policy) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dictionary file: " + path.string());
  }
  return read_dictionary(in, path.string(), policy);
}

Dictionary read_dictionary(std::istream& in, std::string source_name, SanitizePolicy policy) {
  Dictionary d;
  d.source_name = std::move(source_name);
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    bool ok = true;
    for (char& c : line) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c < 'a' || c > 'z') {
        ok = false;
        break;
      }
    }
    if (!ok) {
      if (policy == SanitizePolicy::kStrict) {
        throw std::runtime_error(d.source_name + ": line " + std::to_string(line_no) +
                                 ": characters outside a-z");
      }
      ++d.skipped_lines;
      continue;
    }
    if (seen.insert(line).second) d.words.push_back(line);
  }
  if (in.bad()) {
    throw std::runtime_error("i/o error while reading " + d.source_name);
  }
  return d;
}

void write_dictionary(const Dictionary& d, std::ostream& out) {
  for (const Word& w : d.words) out << w << '\n';
}

}  // namespace anagraph
