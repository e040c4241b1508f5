#pragma once

#include <cstddef>
#include <set>

#include "anagraph/core.hpp"

namespace anagraph {

// Brute-force ground truth for small instances. Exponential by design; used
// by tests and certificate audits only, never by the pipeline.

struct TraceClass {
  std::set<Word> members;
  bool truncated = false;
};

// Breadth-first closure of w under single adjacent swaps of commuting
// letters; stops expanding once more than `limit` members are found.
TraceClass enumerate_trace_class(const Word& w, const CommutationSet& commuting,
                                 std::size_t limit);

enum class OracleVerdict { kTrue, kFalse, kUnknown };

OracleVerdict oracle_trace_equal(const Word& w1, const Word& w2,
                                 const CommutationSet& commuting, std::size_t limit);

}  // namespace anagraph
