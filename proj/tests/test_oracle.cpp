#include "anagraph/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace anagraph;
using testutil::L;

TEST_CASE("trace class of ab") {
  TraceClass with = enumerate_trace_class("ab", testutil::commset("ab"), 10);
  CHECK_FALSE(with.truncated);
  CHECK(with.members == std::set<Word>{"ab", "ba"});

  TraceClass without = enumerate_trace_class("ab", CommutationSet{}, 10);
  CHECK_FALSE(without.truncated);
  CHECK(without.members == std::set<Word>{"ab"});
}

TEST_CASE("trace class of abc under {(a,b),(b,c)}") {
  // bca and cab are unreachable: they would need an (a,c) swap.
  TraceClass tc = enumerate_trace_class("abc", testutil::commset("ab,bc"), 100);
  CHECK_FALSE(tc.truncated);
  CHECK(tc.members == std::set<Word>{"abc", "acb", "bac"});
}

TEST_CASE("truncation reports unknown") {
  // Every adjacent pair commutes; the class of a 9-letter word with distinct
  // letters has 9! members, far over the limit.
  CommutationSet full = CommutationSet::all_pairs();
  TraceClass tc = enumerate_trace_class("quartzose", full, 50);
  CHECK(tc.truncated);
  CHECK(oracle_trace_equal("quartzose", "zzzzzzzzz", full, 50) == OracleVerdict::kFalse);
  // quatorzes is 4 swaps away; reachable well within a 5000-member closure
  CHECK(oracle_trace_equal("quartzose", "quatorzes", full, 5000) == OracleVerdict::kTrue);
  CHECK(oracle_trace_equal("quartzose", "aeoqrstuz", full, 50) == OracleVerdict::kUnknown);
}

TEST_CASE("oracle verdicts on small instances") {
  CHECK(oracle_trace_equal("ab", "ba", testutil::commset("ab"), 10) == OracleVerdict::kTrue);
  CHECK(oracle_trace_equal("ab", "ba", CommutationSet{}, 10) == OracleVerdict::kFalse);
  CHECK(oracle_trace_equal("abab", "baba", CommutationSet{}, 1000) == OracleVerdict::kFalse);
  CHECK(oracle_trace_equal("x", "x", CommutationSet{}, 10) == OracleVerdict::kTrue);
  CHECK(oracle_trace_equal("ab", "ab", CommutationSet{}, 10) == OracleVerdict::kTrue);
}
