#include "anagraph/trace.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

#include "json.hpp"
#include "parallel.hpp"

namespace anagraph {

namespace {

// Differing projections among non-commuting support pairs, counted up to 2.
struct PairAnalysis {
  bool anagrams = false;
  int failing = 0;
  Letter alpha;  // the unique failing pair when failing == 1, alpha < beta
  Letter beta;
  bool one_transposition = false;
};

bool differ_by_one_adjacent_swap(const std::string& x, const std::string& y) {
  if (x.size() != y.size()) return false;
  std::size_t k = 0;
  while (k < x.size() && x[k] == y[k]) ++k;
  if (k + 1 >= x.size()) return false;
  if (!(x[k] == y[k + 1] && x[k + 1] == y[k] && x[k] != x[k + 1])) return false;
  return std::equal(x.begin() + k + 2, x.end(), y.begin() + k + 2);
}

PairAnalysis analyze_pair(const Word& w1, const Word& w2, const CommutationSet& commuting) {
  PairAnalysis a;
  LetterCount lc = letter_count(w1);
  if (w1.size() != w2.size() || lc != letter_count(w2)) return a;
  a.anagrams = true;
  // Pairs with a letter absent from the words project equally; only support
  // pairs can fail.
  auto support = lc.support().letters();
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      Letter p = support[i], q = support[j];
      if (commuting.commutes(p, q)) continue;
      PairProjection pr1 = projection(w1, p, q);
      PairProjection pr2 = projection(w2, p, q);
      if (pr1.sequence == pr2.sequence) continue;
      if (++a.failing > 1) return a;
      a.alpha = p;
      a.beta = q;
      a.one_transposition = differ_by_one_adjacent_swap(pr1.sequence, pr2.sequence);
    }
  }
  return a;
}

// target[t] = index into `w` of the letter that ends up at position t.
// Bubbles each letter into place, recording swaps; fails if any swap would
// exchange a non-commuting (or identical) pair.
std::optional<std::vector<Swap>> rewrite_to_target(const Word& w,
                                                   const std::vector<std::uint32_t>& target,
                                                   const CommutationSet& commuting) {
  const std::size_t n = w.size();
  if (target.size() != n) return std::nullopt;
  std::vector<std::uint32_t> cur(n), pos_of(n);
  std::iota(cur.begin(), cur.end(), 0u);
  std::iota(pos_of.begin(), pos_of.end(), 0u);
  std::vector<Swap> swaps;
  for (std::size_t t = 0; t < n; ++t) {
    std::uint32_t p = pos_of[target[t]];
    for (; p > t; --p) {
      Letter a = Letter::from_char(w[cur[p - 1]]);
      Letter b = Letter::from_char(w[cur[p]]);
      if (a == b || !commuting.commutes(a, b)) return std::nullopt;
      swaps.push_back({static_cast<std::uint32_t>(p - 1), SwapKind::kKnown});
      std::swap(cur[p - 1], cur[p]);
      pos_of[cur[p]] = static_cast<std::uint32_t>(p);
      pos_of[cur[p - 1]] = static_cast<std::uint32_t>(p - 1);
    }
  }
  return swaps;
}

// Maps the h-th occurrence of each letter in `to` onto the h-th occurrence
// in `from`; the resulting permutation never crosses equal letters.
std::optional<std::vector<std::uint32_t>> occurrence_permutation(const Word& from,
                                                                 const Word& to) {
  if (from.size() != to.size()) return std::nullopt;
  std::array<std::vector<std::uint32_t>, kAlphabetSize> positions;
  for (std::size_t i = 0; i < from.size(); ++i) {
    positions[Letter::from_char(from[i]).index()].push_back(static_cast<std::uint32_t>(i));
  }
  std::array<std::size_t, kAlphabetSize> used{};
  std::vector<std::uint32_t> perm(to.size());
  for (std::size_t t = 0; t < to.size(); ++t) {
    int c = Letter::from_char(to[t]).index();
    if (used[c] >= positions[c].size()) return std::nullopt;
    perm[t] = positions[c][used[c]++];
  }
  return perm;
}

}  // namespace

PairProjection projection(const Word& w, Letter alpha, Letter beta) {
  PairProjection p{alpha, beta, {}};
  const char a = alpha.to_char(), b = beta.to_char();
  for (char c : w) {
    if (c == a || c == b) p.sequence.push_back(c);
  }
  return p;
}

bool trace_equal(const Word& w1, const Word& w2, const CommutationSet& commuting) {
  PairAnalysis a = analyze_pair(w1, w2, commuting);
  return a.anagrams && a.failing == 0;
}

std::optional<std::pair<Letter, Letter>> admissible_pair(const Word& w1, const Word& w2) {
  if (!differ_by_one_adjacent_swap(w1, w2)) return std::nullopt;
  std::size_t k = 0;
  while (w1[k] == w2[k]) ++k;
  Letter a = Letter::from_char(w1[k]);
  Letter b = Letter::from_char(w1[k + 1]);
  return std::make_pair(std::min(a, b), std::max(a, b));
}

std::optional<std::pair<Letter, Letter>> extract_commutator(const Word& w1, const Word& w2,
                                                            const CommutationSet& commuting) {
  PairAnalysis a = analyze_pair(w1, w2, commuting);
  if (!a.anagrams || a.failing != 1 || !a.one_transposition) return std::nullopt;
  return std::make_pair(a.alpha, a.beta);
}

Word AdmissibleForm::to_word() const {
  Word w;
  w.reserve(prefix.size() + suffix.size() + 2);
  w.append(prefix);
  w.push_back(first.to_char());
  w.push_back(second.to_char());
  w.append(suffix);
  return w;
}

bool check_certificate(const SwapCertificate& c, const CommutationSet& commuting) {
  Word w = c.start;
  for (const Swap& s : c.swaps) {
    if (s.kind != SwapKind::kKnown) return false;
    if (s.pos + 1 >= w.size()) return false;
    Letter a = Letter::from_char(w[s.pos]);
    Letter b = Letter::from_char(w[s.pos + 1]);
    if (a == b || !commuting.commutes(a, b)) return false;
    std::swap(w[s.pos], w[s.pos + 1]);
  }
  return w == c.end_form.to_word();
}

std::optional<CertificatePair> find_certificate(const Word& w1, const Word& w2, Letter alpha,
                                                Letter beta, const CommutationSet& commuting) {
  if (alpha == beta) return std::nullopt;
  PairProjection p1 = projection(w1, alpha, beta);
  PairProjection p2 = projection(w2, alpha, beta);
  if (p1.sequence.size() != p2.sequence.size()) return std::nullopt;
  if (!differ_by_one_adjacent_swap(p1.sequence, p2.sequence)) return std::nullopt;

  std::size_t k = 0;
  while (p1.sequence[k] == p2.sequence[k]) ++k;
  // The crossed occurrences are consecutive in the projection, hence there
  // is no alpha or beta strictly between them in w1.
  std::vector<std::uint32_t> occ;
  const char ca = alpha.to_char(), cb = beta.to_char();
  for (std::size_t i = 0; i < w1.size(); ++i) {
    if (w1[i] == ca || w1[i] == cb) occ.push_back(static_cast<std::uint32_t>(i));
  }
  Letter x = Letter::from_char(p1.sequence[k]);
  Letter y = Letter::from_char(p1.sequence[k + 1]);
  const std::uint32_t pos_x = occ[k], pos_y = occ[k + 1];

  // Each letter between the crossed pair must end up left of x (so it has
  // to commute with x) or right of y (commute with y). A letter that ends
  // left while an earlier one ends right makes the two cross each other,
  // which needs them to commute; taking the backward closure of the forced
  // "left" letters yields the minimal consistent split, if any.
  const std::size_t t = pos_y - pos_x - 1;
  std::vector<char> mid(w1.begin() + pos_x + 1, w1.begin() + pos_y);
  std::vector<bool> left(t, false);
  for (std::size_t i = 0; i < t; ++i) {
    left[i] = !commuting.commutes(Letter::from_char(mid[i]), y);
  }
  for (std::size_t i = t; i-- > 0;) {
    if (!left[i]) continue;
    Letter li = Letter::from_char(mid[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (!left[j] && !commuting.commutes(Letter::from_char(mid[j]), li)) left[j] = true;
    }
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (left[i] && !commuting.commutes(Letter::from_char(mid[i]), x)) return std::nullopt;
  }

  std::vector<std::uint32_t> target;
  target.reserve(w1.size());
  for (std::uint32_t i = 0; i < pos_x; ++i) target.push_back(i);
  for (std::size_t i = 0; i < t; ++i) {
    if (left[i]) target.push_back(pos_x + 1 + static_cast<std::uint32_t>(i));
  }
  const std::size_t split = target.size();
  target.push_back(pos_x);
  target.push_back(pos_y);
  for (std::size_t i = 0; i < t; ++i) {
    if (!left[i]) target.push_back(pos_x + 1 + static_cast<std::uint32_t>(i));
  }
  for (std::uint32_t i = pos_y + 1; i < w1.size(); ++i) target.push_back(i);

  auto swaps1 = rewrite_to_target(w1, target, commuting);
  if (!swaps1) return std::nullopt;

  Word form;
  form.reserve(w1.size());
  for (std::uint32_t src : target) form.push_back(w1[src]);
  Word s1 = form.substr(0, split);
  Word s2 = form.substr(split + 2);

  SwapCertificate c1{w1, std::move(*swaps1), AdmissibleForm{s1, x, y, s2}};

  Word flipped = AdmissibleForm{s1, y, x, s2}.to_word();
  auto perm2 = occurrence_permutation(w2, flipped);
  if (!perm2) return std::nullopt;
  auto swaps2 = rewrite_to_target(w2, *perm2, commuting);
  if (!swaps2) return std::nullopt;
  SwapCertificate c2{w2, std::move(*swaps2), AdmissibleForm{s1, y, x, s2}};

  if (!check_certificate(c1, commuting) || !check_certificate(c2, commuting)) {
    return std::nullopt;
  }
  return CertificatePair{std::move(c1), std::move(c2)};
}

std::optional<CommutatorWitness> witness_from_pair(const Anagraph& g, std::size_t i,
                                                   std::size_t j,
                                                   const CommutationSet& commuting,
                                                   DetectionRule rule, bool* refused) {
  const Word& u = g.vertices[i];
  const Word& v = g.vertices[j];
  std::optional<std::pair<Letter, Letter>> extracted;
  if (rule == DetectionRule::kAdmissibleOnly) {
    extracted = admissible_pair(u, v);
    if (extracted && commuting.commutes(extracted->first, extracted->second)) {
      return std::nullopt;  // already known; the relation is implied
    }
  } else {
    extracted = extract_commutator(u, v, commuting);
  }
  if (!extracted) return std::nullopt;
  const auto [alpha, beta] = *extracted;

  // Prefer a direct dictionary anagram pair: sources of u and v with equal
  // letter counts came through the same initial bucket and the same
  // deletions, so they carry the same projection mismatch.
  struct Candidate {
    Word word1, word2;
    Word origin1, origin2;
  };
  std::vector<Candidate> candidates;
  Word best1, best2;
  bool have_best = false;
  for (const Word& su : g.sources[i]) {
    for (const Word& sv : g.sources[j]) {
      if (su.size() != sv.size() || letter_count(su) != letter_count(sv)) continue;
      Word a = std::min(su, sv), b = std::max(su, sv);
      if (!have_best || std::tie(a, b) < std::tie(best1, best2)) {
        best1 = std::move(a);
        best2 = std::move(b);
        have_best = true;
      }
    }
  }
  if (have_best) candidates.push_back({best1, best2, best1, best2});
  Word r1 = std::min(u, v), r2 = std::max(u, v);
  if (!have_best || best1 != r1 || best2 != r2) {
    const Word& o1 = (r1 == u) ? g.sources[i].front() : g.sources[j].front();
    const Word& o2 = (r2 == v) ? g.sources[j].front() : g.sources[i].front();
    candidates.push_back({r1, r2, o1, o2});
  }

  for (const Candidate& c : candidates) {
    auto e = extract_commutator(c.word1, c.word2, commuting);
    if (!e || *e != std::make_pair(alpha, beta)) continue;
    auto certs = find_certificate(c.word1, c.word2, alpha, beta, commuting);
    if (!certs) continue;
    CommutatorWitness w;
    w.alpha = alpha;
    w.beta = beta;
    w.word1 = c.word1;
    w.word2 = c.word2;
    w.origin1 = c.origin1;
    w.origin2 = c.origin2;
    w.certificate1 = std::move(certs->first);
    w.certificate2 = std::move(certs->second);
    w.stage = commuting;
    return w;
  }
  if (refused) *refused = true;
  return std::nullopt;
}

ScanOutcome scan_for_commutators(const AnagraphStore& store, const CommutationSet& commuting,
                                 int parallelism) {
  struct BucketScan {
    std::vector<CommutatorWitness> witnesses;
    std::vector<std::pair<Word, Word>> refused;
  };
  std::vector<BucketScan> per_bucket(store.buckets.size());
  internal::parallel_for(store.buckets.size(), parallelism, [&](std::size_t bi) {
    const Anagraph& g = store.buckets[bi];
    auto& slot = per_bucket[bi];
    for_each_component_pair(g, [&](std::size_t i, std::size_t j) {
      bool refused = false;
      auto w = witness_from_pair(g, i, j, commuting, DetectionRule::kAdmissibleOnly, &refused);
      if (w) {
        slot.witnesses.push_back(std::move(*w));
      } else if (refused) {
        slot.refused.emplace_back(g.vertices[i], g.vertices[j]);
      }
    });
  });

  ScanOutcome out;
  std::array<std::uint32_t, kAlphabetSize> taken{};
  for (auto& slot : per_bucket) {
    for (auto& w : slot.witnesses) {
      if ((taken[w.alpha.index()] >> w.beta.index()) & 1u) continue;
      taken[w.alpha.index()] |= 1u << w.beta.index();
      out.witnesses.push_back(std::move(w));
    }
    out.refused.insert(out.refused.end(), slot.refused.begin(), slot.refused.end());
  }
  return out;
}

std::string certificate_to_json(const SwapCertificate& c) {
  nlohmann::json swaps = nlohmann::json::array();
  for (const Swap& s : c.swaps) {
    swaps.push_back({{"pos", s.pos}, {"kind", s.kind == SwapKind::kKnown ? "known" : "target"}});
  }
  nlohmann::json doc;
  doc["start"] = c.start;
  doc["swaps"] = std::move(swaps);
  doc["end_form"] = {{"s1", c.end_form.prefix},
                     {"alpha", std::string(1, c.end_form.first.to_char())},
                     {"beta", std::string(1, c.end_form.second.to_char())},
                     {"s2", c.end_form.suffix}};
  return doc.dump();
}

}  // namespace anagraph
