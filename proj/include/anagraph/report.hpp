#pragma once

#include <string>
#include <utility>
#include <vector>

#include "anagraph/core.hpp"
#include "anagraph/pipeline.hpp"

namespace anagraph {

enum class DocFormat { kText, kJson };
enum class TableFormat { kCsv, kText };

// The presentation of the group: which generator pairs commute and which do
// not. Relation and missing pairs partition all unordered pairs.
struct PresentationDoc {
  int alphabet = kAlphabetSize;
  std::vector<std::pair<Letter, Letter>> relation_pairs;  // sorted, alpha < beta
  std::vector<std::pair<Letter, Letter>> missing_pairs;   // sorted, alpha < beta
  bool right_angled_artin = false;

  friend bool operator==(const PresentationDoc&, const PresentationDoc&) = default;
};

PresentationDoc build_presentation(const RunResult& r);

// Text groups the missing pairs by letter; JSON carries flat canonical pair
// lists under the stable schema "anagraph.presentation/1".
std::string emit_presentation(const RunResult& r, DocFormat format);
PresentationDoc parse_presentation(const std::string& json_text);

// Rows (iteration, alpha, beta, word1, word2) sorted by iteration then
// pair; residual rows come last, labeled "manual".
std::string emit_witness_table(const RunResult& r, TableFormat format);

// One row per iteration: bucket count and cumulative commutators.
std::string emit_progress(const RunResult& r, TableFormat format);

std::string emit_verification(const RunResult& r, DocFormat format);

// Full witness list with replayable certificates, for audits.
std::string emit_certificates(const RunResult& r);

// Canonical serialization of an entire RunResult; equal runs serialize to
// identical bytes.
std::string run_result_to_json(const RunResult& r);

}  // namespace anagraph
