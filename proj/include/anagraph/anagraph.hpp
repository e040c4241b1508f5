#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "anagraph/core.hpp"
#include "anagraph/dictionary.hpp"

namespace anagraph {

// One bucket of the store: the distinct (possibly reduced) words sharing a
// letter count, partitioned into components of words known to be equal.
// `sources` maps each vertex back to the dictionary words that reduced to it.
struct Anagraph {
  LetterCount key;
  std::vector<Word> vertices;              // sorted, distinct
  std::vector<std::uint32_t> component;    // per vertex; ids normalized by first use
  std::vector<std::vector<Word>> sources;  // per vertex; sorted, distinct

  std::size_t size() const { return vertices.size(); }
  std::size_t component_count() const;

  friend bool operator==(const Anagraph&, const Anagraph&) = default;
};

struct AnagraphStore {
  std::vector<Anagraph> buckets;  // sorted by key

  std::size_t bucket_count() const { return buckets.size(); }
  std::size_t vertex_count() const;

  friend bool operator==(const AnagraphStore&, const AnagraphStore&) = default;
};

// One bucket per letter count occurring at least twice; each starts as a
// single component. Words with a unique letter count are discarded.
AnagraphStore build_anagraphs(const Dictionary& d);

// Deletes every occurrence of every listed letter, preserving order.
Word reduce_word(const Word& w, LetterSet remove);

// Deletes removable letters in every bucket until none remain, merges
// vertices that reduce to the same string and buckets whose reduced keys
// coincide, and drops buckets left with one vertex or an empty key.
AnagraphStore reduce_store(const AnagraphStore& store, const CommutationSet& commuting,
                           int parallelism = 1);

// Each unordered pair of distinct vertices within one component, exactly
// once, in (i, j) index order.
void for_each_component_pair(const Anagraph& g,
                             const std::function<void(std::size_t, std::size_t)>& fn);
std::vector<std::pair<Word, Word>> component_pairs(const Anagraph& g);

// Debug dump: buckets with key, vertices, components and provenance.
std::string store_to_json(const AnagraphStore& store);

}  // namespace anagraph
