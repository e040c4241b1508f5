#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anagraph/anagraph.hpp"
#include "anagraph/core.hpp"

namespace anagraph {

// The order-preserving subsequence of a word over two chosen letters.
struct PairProjection {
  Letter alpha;
  Letter beta;
  std::string sequence;

  friend bool operator==(const PairProjection&, const PairProjection&) = default;
};

PairProjection projection(const Word& w, Letter alpha, Letter beta);

// Words are equal modulo the commutation set iff they have the same letter
// count and agree on the projection of every non-commuting letter pair;
// equivalently, one is reachable from the other by adjacent swaps of
// commuting letters.
bool trace_equal(const Word& w1, const Word& w2, const CommutationSet& commuting);

// Detects a directly admissible pair: w1 = s1+a+b+s2 and w2 = s1+b+a+s2 as
// literal strings. Returns the pair with alpha < beta.
std::optional<std::pair<Letter, Letter>> admissible_pair(const Word& w1, const Word& w2);

// For an anagram pair that is not trace-equal: if exactly one non-commuting
// pair {alpha, beta} has differing projections, and those differ by exactly
// one adjacent transposition, the relation w1 = w2 together with the known
// commutators forces [alpha, beta]. Returns the pair with alpha < beta.
// With an empty commutation set this accepts exactly the admissible pairs.
std::optional<std::pair<Letter, Letter>> extract_commutator(const Word& w1, const Word& w2,
                                                            const CommutationSet& commuting);

enum class SwapKind : std::uint8_t { kKnown, kTarget };

struct Swap {
  std::uint32_t pos = 0;
  SwapKind kind = SwapKind::kKnown;

  friend bool operator==(const Swap&, const Swap&) = default;
};

// The word s1 + first + second + s2 a certificate rewrites to.
struct AdmissibleForm {
  Word prefix;
  Letter first;
  Letter second;
  Word suffix;

  Word to_word() const;
  friend bool operator==(const AdmissibleForm&, const AdmissibleForm&) = default;
};

// A replayable rewrite of `start` into its admissible form using only
// adjacent swaps of commuting letters. Certificates never contain a
// "target" swap; they stay inside one trace class.
struct SwapCertificate {
  Word start;
  std::vector<Swap> swaps;
  AdmissibleForm end_form;

  friend bool operator==(const SwapCertificate&, const SwapCertificate&) = default;
};

// Replays every swap, checking adjacency, distinctness and membership in
// the commutation set, then compares against the recorded end form.
bool check_certificate(const SwapCertificate& c, const CommutationSet& commuting);

std::string certificate_to_json(const SwapCertificate& c);

// Certificates for both sides of an extraction: the first rewrites w1 to
// s1+alpha+beta+s2, the second rewrites w2 to s1+beta+alpha+s2.
struct CertificatePair {
  SwapCertificate first;
  SwapCertificate second;
};

// Constructs the certificate pair promised by extract_commutator, or fails,
// in which case the extraction claim must be refused rather than accepted.
std::optional<CertificatePair> find_certificate(const Word& w1, const Word& w2, Letter alpha,
                                                Letter beta, const CommutationSet& commuting);

// A discovered commutator with the anagram pair and certificates proving it.
// `origin1`/`origin2` are dictionary words the pair resolves to (equal to
// word1/word2 whenever a direct dictionary pair witnesses the commutator).
// iteration 0 marks the residual phase.
struct CommutatorWitness {
  Letter alpha;
  Letter beta;
  Word word1;
  Word word2;
  Word origin1;
  Word origin2;
  int iteration = 0;
  SwapCertificate certificate1;
  SwapCertificate certificate2;
  CommutationSet stage;  // commutators known when this one was extracted

  bool residual() const { return iteration == 0; }
};

// Which rule decides that a vertex pair yields a commutator. The fixpoint
// loop looks for directly admissible pairs among the reduced vertices; the
// residual phase applies the general projection rule.
enum class DetectionRule { kAdmissibleOnly, kGeneral };

// Tries to turn one component pair into a certified witness. Returns nothing
// when the pair is trace-equal or not admissible; sets *refused when the
// extraction rule fired but no certificate could be built (soundness guard).
std::optional<CommutatorWitness> witness_from_pair(const Anagraph& g, std::size_t i,
                                                   std::size_t j,
                                                   const CommutationSet& commuting,
                                                   DetectionRule rule, bool* refused);

struct ScanOutcome {
  std::vector<CommutatorWitness> witnesses;         // deduped, first per (alpha, beta)
  std::vector<std::pair<Word, Word>> refused;       // pairs needing review
};

// Collects admissible pairs from every component pair of every bucket with
// the commutation set frozen at call time. Deterministic scan order: buckets
// by key, pairs by vertex index.
ScanOutcome scan_for_commutators(const AnagraphStore& store, const CommutationSet& commuting,
                                 int parallelism = 1);

}  // namespace anagraph
