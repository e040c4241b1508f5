#include "anagraph/anagraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "json.hpp"
#include "parallel.hpp"

namespace anagraph {

namespace {

struct DisjointSet {
  std::vector<std::uint32_t> parent;

  explicit DisjointSet(std::size_t n = 0) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t add() {
    parent.push_back(static_cast<std::uint32_t>(parent.size()));
    return parent.back();
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

// Sorts vertices, relabels components in order of first appearance and
// sorts/dedups provenance. Every bucket entering the store goes through here.
Anagraph canonicalize(LetterCount key, std::vector<Word> words,
                      std::vector<std::uint32_t> group,
                      std::vector<std::vector<Word>> sources) {
  const std::size_t n = words.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return words[a] < words[b]; });

  Anagraph g;
  g.key = key;
  g.vertices.reserve(n);
  g.component.reserve(n);
  g.sources.reserve(n);
  std::unordered_map<std::uint32_t, std::uint32_t> relabel;
  for (std::size_t i : order) {
    g.vertices.push_back(std::move(words[i]));
    auto [it, inserted] = relabel.try_emplace(group[i], static_cast<std::uint32_t>(relabel.size()));
    g.component.push_back(it->second);
    auto& src = sources[i];
    std::sort(src.begin(), src.end());
    src.erase(std::unique(src.begin(), src.end()), src.end());
    g.sources.push_back(std::move(src));
  }
  return g;
}

// A bucket after per-bucket reduction, before cross-bucket merging.
struct ReducedBucket {
  LetterCount key;
  bool changed = false;
  bool dropped = false;
  std::vector<Word> words;  // distinct
  std::vector<std::uint32_t> group;
  std::vector<std::vector<Word>> sources;
};

ReducedBucket reduce_bucket(const Anagraph& g, const CommutationSet& commuting) {
  LetterCount key = g.key;
  LetterSet removed;
  // Deleting letters can in principle expose more removable ones; iterate.
  for (;;) {
    LetterSet r = removable_letters(key, commuting);
    if (r.empty()) break;
    removed.merge(r);
    for (Letter l : r.letters()) key[l] = 0;
  }

  ReducedBucket rb;
  rb.key = key;
  if (removed.empty()) {
    rb.words = g.vertices;
    rb.group = g.component;
    rb.sources = g.sources;
    return rb;
  }
  rb.changed = true;
  if (key.zero()) {
    rb.dropped = true;  // every vertex reduced to the empty word
    return rb;
  }

  const std::size_t n = g.vertices.size();
  DisjointSet dsu(n);
  std::unordered_map<std::uint32_t, std::uint32_t> first_in_component;
  std::unordered_map<Word, std::uint32_t> first_of_string;
  std::vector<Word> reduced(n);
  for (std::size_t i = 0; i < n; ++i) {
    reduced[i] = reduce_word(g.vertices[i], removed);
    auto idx = static_cast<std::uint32_t>(i);
    auto [cit, cnew] = first_in_component.try_emplace(g.component[i], idx);
    if (!cnew) dsu.unite(idx, cit->second);
    auto [sit, snew] = first_of_string.try_emplace(reduced[i], idx);
    if (!snew) dsu.unite(idx, sit->second);
  }
  std::unordered_map<Word, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = slot.try_emplace(reduced[i], rb.words.size());
    if (inserted) {
      rb.words.push_back(reduced[i]);
      rb.group.push_back(dsu.find(static_cast<std::uint32_t>(i)));
      rb.sources.push_back(g.sources[i]);
    } else {
      auto& dst = rb.sources[it->second];
      dst.insert(dst.end(), g.sources[i].begin(), g.sources[i].end());
    }
  }
  return rb;
}

}  // namespace

std::size_t Anagraph::component_count() const {
  std::uint32_t max_id = 0;
  for (auto c : component) max_id = std::max(max_id, c);
  return component.empty() ? 0 : max_id + 1;
}

std::size_t AnagraphStore::vertex_count() const {
  std::size_t n = 0;
  for (const auto& g : buckets) n += g.size();
  return n;
}

AnagraphStore build_anagraphs(const Dictionary& d) {
  std::unordered_map<LetterCount, std::vector<Word>, LetterCountHash> groups;
  for (const Word& w : d.words) groups[letter_count(w)].push_back(w);

  AnagraphStore store;
  for (auto& [key, words] : groups) {
    if (words.size() < 2) continue;
    std::vector<std::uint32_t> group(words.size(), 0);  // one component
    std::vector<std::vector<Word>> sources;
    sources.reserve(words.size());
    for (const Word& w : words) sources.push_back({w});
    store.buckets.push_back(canonicalize(key, std::move(words), std::move(group), std::move(sources)));
  }
  std::sort(store.buckets.begin(), store.buckets.end(),
            [](const Anagraph& a, const Anagraph& b) { return a.key < b.key; });
  return store;
}

Word reduce_word(const Word& w, LetterSet remove) {
  Word out;
  out.reserve(w.size());
  for (char c : w) {
    if (!remove.contains(Letter::from_char(c))) out.push_back(c);
  }
  return out;
}

AnagraphStore reduce_store(const AnagraphStore& store, const CommutationSet& commuting,
                           int parallelism) {
  std::vector<ReducedBucket> reduced(store.buckets.size());
  internal::parallel_for(store.buckets.size(), parallelism, [&](std::size_t i) {
    reduced[i] = reduce_bucket(store.buckets[i], commuting);
  });

  // Group by reduced key, preserving first-encounter order.
  std::unordered_map<LetterCount, std::size_t, LetterCountHash> key_slot;
  std::vector<std::vector<const ReducedBucket*>> groups;
  for (const auto& rb : reduced) {
    if (rb.dropped) continue;
    auto [it, inserted] = key_slot.try_emplace(rb.key, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(&rb);
  }

  AnagraphStore out;
  for (const auto& group : groups) {
    if (group.size() == 1 && !group[0]->changed) {
      if (group[0]->words.size() < 2) continue;
      out.buckets.push_back(canonicalize(group[0]->key, group[0]->words, group[0]->group,
                                         group[0]->sources));
      continue;
    }
    std::unordered_map<Word, std::uint32_t> slot;
    std::vector<Word> words;
    std::vector<std::vector<Word>> sources;
    DisjointSet dsu;
    for (const ReducedBucket* rb : group) {
      std::unordered_map<std::uint32_t, std::uint32_t> local_group_rep;
      for (std::size_t i = 0; i < rb->words.size(); ++i) {
        auto [it, inserted] = slot.try_emplace(rb->words[i], static_cast<std::uint32_t>(words.size()));
        if (inserted) {
          words.push_back(rb->words[i]);
          sources.push_back(rb->sources[i]);
          dsu.add();
        } else {
          auto& dst = sources[it->second];
          dst.insert(dst.end(), rb->sources[i].begin(), rb->sources[i].end());
        }
        auto [git, gnew] = local_group_rep.try_emplace(rb->group[i], it->second);
        if (!gnew) dsu.unite(it->second, git->second);
      }
    }
    if (words.size() < 2) continue;
    std::vector<std::uint32_t> group_ids(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      group_ids[i] = dsu.find(static_cast<std::uint32_t>(i));
    }
    out.buckets.push_back(canonicalize(group[0]->key, std::move(words), std::move(group_ids),
                                       std::move(sources)));
  }
  std::sort(out.buckets.begin(), out.buckets.end(),
            [](const Anagraph& a, const Anagraph& b) { return a.key < b.key; });
  return out;
}

void for_each_component_pair(const Anagraph& g,
                             const std::function<void(std::size_t, std::size_t)>& fn) {
  for (std::size_t i = 0; i + 1 < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (g.component[i] == g.component[j]) fn(i, j);
    }
  }
}

std::vector<std::pair<Word, Word>> component_pairs(const Anagraph& g) {
  std::vector<std::pair<Word, Word>> out;
  for_each_component_pair(g, [&](std::size_t i, std::size_t j) {
    out.emplace_back(g.vertices[i], g.vertices[j]);
  });
  return out;
}

std::string store_to_json(const AnagraphStore& store) {
  nlohmann::json buckets = nlohmann::json::array();
  for (const auto& g : store.buckets) {
    nlohmann::json b;
    b["key"] = g.key.spelling();
    b["vertices"] = g.vertices;
    b["components"] = g.component;
    b["sources"] = g.sources;
    buckets.push_back(std::move(b));
  }
  nlohmann::json doc;
  doc["schema"] = "anagraph.store/1";
  doc["buckets"] = std::move(buckets);
  return doc.dump(2);
}

}  // namespace anagraph
