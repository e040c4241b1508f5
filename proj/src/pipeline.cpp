#include "anagraph/pipeline.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>
#include <unordered_map>

#include "parallel.hpp"

namespace anagraph {

namespace {

void warn_refused(const std::vector<std::pair<Word, Word>>& refused, const char* phase) {
  for (const auto& [a, b] : refused) {
    std::cerr << "anagraph: " << phase << ": extraction for (" << a << ", " << b
              << ") had no certificate; pair left for review\n";
  }
}

}  // namespace

RunResult run(const Dictionary& d, const RunConfig& config) {
  const int par = internal::resolve_parallelism(config.parallelism);
  RunResult result;
  result.source_name = d.source_name;

  AnagraphStore store = build_anagraphs(d);
  CommutationSet known;
  int iteration = 0;
  for (;;) {
    if (iteration >= config.max_iterations) {
      throw std::runtime_error(
          "iteration cap (" + std::to_string(config.max_iterations) + ") exceeded after " +
          std::to_string(result.stats.size()) + " recorded iterations with " +
          std::to_string(known.size()) + " commutators and " +
          std::to_string(store.bucket_count()) + " buckets");
    }
    ++iteration;
    AnagraphStore reduced = reduce_store(store, known, par);
    const bool changed = !(reduced == store);
    store = std::move(reduced);
    ScanOutcome scan = scan_for_commutators(store, known, par);
    warn_refused(scan.refused, "scan");
    if (scan.witnesses.empty() && !changed) break;  // fixpoint confirmed
    for (auto& w : scan.witnesses) {
      w.iteration = iteration;
      known.add(w.alpha, w.beta);
      result.witnesses.push_back(std::move(w));
    }
    result.stats.push_back({iteration, store.bucket_count(), static_cast<std::size_t>(known.size())});
  }

  std::vector<std::pair<Word, Word>> residual_failures;
  if (config.residual_phase) {
    result.residual_phase_ran = true;
    ResidualOutcome residual = process_residuals(store, known, par);
    known = residual.commutators;
    for (auto& w : residual.witnesses) result.witnesses.push_back(std::move(w));
    store = std::move(residual.remaining);
    residual_failures = std::move(residual.failing_pairs);
  }

  result.commutators = known;
  result.missing = known.missing_pairs();
  result.residual_buckets = std::move(store);

  if (config.verify) {
    result.verification_ran = true;
    result.verification = verify_containment(d, known, par);
  }
  auto& failing = result.verification.failing_pairs;
  failing.insert(failing.end(), residual_failures.begin(), residual_failures.end());
  std::sort(failing.begin(), failing.end());
  failing.erase(std::unique(failing.begin(), failing.end()), failing.end());
  result.verification.all_relations_implied = failing.empty();
  return result;
}

ResidualOutcome process_residuals(const AnagraphStore& store, const CommutationSet& commuting,
                                  int parallelism) {
  ResidualOutcome out;
  out.commutators = commuting;
  AnagraphStore current = store;

  // Each certified find re-enters reduction, which can unlock further
  // extractions; restart the sweep until a full pass adds nothing.
  for (;;) {
    bool found = false;
    std::vector<std::pair<Word, Word>> refused;
    for (const Anagraph& g : current.buckets) {
      std::optional<CommutatorWitness> witness;
      for_each_component_pair(g, [&](std::size_t i, std::size_t j) {
        if (witness) return;
        if (trace_equal(g.vertices[i], g.vertices[j], out.commutators)) return;
        bool pair_refused = false;
        auto w = witness_from_pair(g, i, j, out.commutators, DetectionRule::kGeneral, &pair_refused);
        if (w) {
          witness = std::move(w);
        } else if (pair_refused) {
          refused.emplace_back(g.vertices[i], g.vertices[j]);
        }
      });
      if (witness) {
        witness->iteration = 0;
        out.commutators.add(witness->alpha, witness->beta);
        out.witnesses.push_back(std::move(*witness));
        current = reduce_store(current, out.commutators, parallelism);
        found = true;
        break;
      }
    }
    if (!found) {
      warn_refused(refused, "residual");
      break;
    }
  }

  // Whatever is neither implied nor extractable is reported; buckets whose
  // pairs are all implied carry no further information.
  for (const Anagraph& g : current.buckets) {
    bool keep = false;
    for_each_component_pair(g, [&](std::size_t i, std::size_t j) {
      if (!trace_equal(g.vertices[i], g.vertices[j], out.commutators)) {
        keep = true;
        out.failing_pairs.emplace_back(g.vertices[i], g.vertices[j]);
      }
    });
    if (keep) out.remaining.buckets.push_back(g);
  }
  return out;
}

VerificationReport verify_containment(const Dictionary& d, const CommutationSet& final_set,
                                      int parallelism) {
  // Anagram classes of the raw dictionary, sorted for determinism.
  std::unordered_map<LetterCount, std::vector<Word>, LetterCountHash> groups;
  for (const Word& w : d.words) groups[letter_count(w)].push_back(w);
  std::vector<std::pair<LetterCount, std::vector<Word>>> classes;
  for (auto& [key, words] : groups) {
    if (words.size() < 2) continue;
    std::sort(words.begin(), words.end());
    classes.emplace_back(key, std::move(words));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  VerificationReport report;
  std::vector<std::vector<std::pair<Word, Word>>> failures(classes.size());
  internal::parallel_for(classes.size(), parallelism, [&](std::size_t ci) {
    const auto& members = classes[ci].second;
    for (std::size_t m = 1; m < members.size(); ++m) {
      if (!trace_equal(members[0], members[m], final_set)) {
        failures[ci].emplace_back(members[0], members[m]);
      }
    }
  });
  for (auto& f : failures) {
    report.failing_pairs.insert(report.failing_pairs.end(), f.begin(), f.end());
  }
  report.all_relations_implied = report.failing_pairs.empty();

  for (auto [alpha, beta] : final_set.missing_pairs()) {
    VerificationReport::MissingPairPattern entry;
    entry.alpha = alpha;
    entry.beta = beta;
    for (const auto& [key, members] : classes) {
      LetterSet support = key.support();
      if (!support.contains(alpha) || !support.contains(beta)) continue;
      const std::string pattern = projection(members[0], alpha, beta).sequence;
      if (entry.classes_with_both == 0) entry.example_pattern = pattern;
      ++entry.classes_with_both;
      for (std::size_t m = 1; m < members.size(); ++m) {
        if (projection(members[m], alpha, beta).sequence != pattern) {
          entry.consistent = false;
        }
      }
    }
    report.maximality.push_back(std::move(entry));
  }
  return report;
}

}  // namespace anagraph
