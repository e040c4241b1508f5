#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "anagraph/anagraph.hpp"
#include "anagraph/core.hpp"
#include "anagraph/dictionary.hpp"
#include "anagraph/trace.hpp"

namespace anagraph {

struct RunConfig {
  int max_iterations = 50;
  bool residual_phase = true;
  bool verify = true;
  int parallelism = 1;  // 0 = one worker per hardware thread
};

// One row of the progress table: bucket count after this iteration's
// reduction, cumulative commutators after its scan.
struct IterationStats {
  int iteration = 0;
  std::size_t bucket_count = 0;
  std::size_t cumulative_commutators = 0;

  friend bool operator==(const IterationStats&, const IterationStats&) = default;
};

struct VerificationReport {
  bool all_relations_implied = true;
  std::vector<std::pair<Word, Word>> failing_pairs;

  // Per missing pair: whether every anagram class containing both letters
  // shares a single projection pattern, as it must when the final set
  // implies all relations.
  struct MissingPairPattern {
    Letter alpha;
    Letter beta;
    std::size_t classes_with_both = 0;
    bool consistent = true;
    std::string example_pattern;  // pattern of the first class seen
  };
  std::vector<MissingPairPattern> maximality;
};

struct RunResult {
  CommutationSet commutators;
  std::vector<CommutatorWitness> witnesses;
  std::vector<std::pair<Letter, Letter>> missing;
  AnagraphStore residual_buckets;
  std::vector<IterationStats> stats;
  VerificationReport verification;
  bool residual_phase_ran = false;
  bool verification_ran = false;
  std::string source_name;
};

// Builds the store, alternates reduction and scanning to a fixpoint, then
// runs residual processing and the containment check. Deterministic for a
// fixed dictionary and config, independent of parallelism.
// Throws std::runtime_error when max_iterations is exceeded.
RunResult run(const Dictionary& d, const RunConfig& config = {});

struct ResidualOutcome {
  CommutationSet commutators;
  std::vector<CommutatorWitness> witnesses;  // iteration 0 ("manual" in reports)
  AnagraphStore remaining;                   // buckets with unexplained pairs
  std::vector<std::pair<Word, Word>> failing_pairs;
};

// For every component pair left at the fixpoint: discard pairs implied by
// the commutation set, extract further certified commutators (re-reducing
// after each find), and report whatever resists both.
ResidualOutcome process_residuals(const AnagraphStore& store, const CommutationSet& commuting,
                                  int parallelism = 1);

// Checks every anagram class of the raw dictionary against the final set
// and builds the per-missing-pair projection-pattern report.
VerificationReport verify_containment(const Dictionary& d, const CommutationSet& final_set,
                                      int parallelism = 1);

}  // namespace anagraph
