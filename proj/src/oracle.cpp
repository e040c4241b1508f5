#include "anagraph/oracle.hpp"

#include <deque>
#include <unordered_set>

namespace anagraph {

namespace {

// Shared BFS: stops early once `stop_at` is found (when non-null).
TraceClass closure(const Word& w, const CommutationSet& commuting, std::size_t limit,
                   const Word* stop_at, bool* found) {
  TraceClass tc;
  std::unordered_set<Word> seen{w};
  std::deque<Word> queue{w};
  if (found) *found = (stop_at && w == *stop_at);
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Letter a = Letter::from_char(cur[i]);
      Letter b = Letter::from_char(cur[i + 1]);
      if (a == b || !commuting.commutes(a, b)) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (!seen.insert(next).second) continue;
      if (stop_at && next == *stop_at && found) *found = true;
      if (seen.size() > limit) {
        tc.truncated = true;
        tc.members.insert(seen.begin(), seen.end());
        return tc;
      }
      queue.push_back(std::move(next));
    }
    if (found && *found) break;
  }
  tc.members.insert(seen.begin(), seen.end());
  return tc;
}

}  // namespace

TraceClass enumerate_trace_class(const Word& w, const CommutationSet& commuting,
                                 std::size_t limit) {
  return closure(w, commuting, limit, nullptr, nullptr);
}

OracleVerdict oracle_trace_equal(const Word& w1, const Word& w2,
                                 const CommutationSet& commuting, std::size_t limit) {
  if (w1 == w2) return OracleVerdict::kTrue;
  if (!is_anagram(w1, w2)) return OracleVerdict::kFalse;
  bool found = false;
  TraceClass tc = closure(w1, commuting, limit, &w2, &found);
  if (found) return OracleVerdict::kTrue;
  return tc.truncated ? OracleVerdict::kUnknown : OracleVerdict::kFalse;
}

}  // namespace anagraph
