#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "colex/error.hpp"
#include "colex/records.hpp"

namespace colex {

using SynsetPair = std::pair<SynsetId, SynsetId>;  // canonical: first < second

inline SynsetPair make_canonical_pair(SynsetId a, SynsetId b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

/// One synset-pair edge with its witness set of (lemma, language) tuples.
struct ColexEdge {
  SynsetPair pair;
  std::vector<Witness> witnesses;  // sorted, unique

  void add_witness(const std::string& lemma, const std::string& language) {
    Witness w{lemma, language};
    auto it = std::lower_bound(witnesses.begin(), witnesses.end(), w);
    if (it == witnesses.end() || *it != w) witnesses.insert(it, std::move(w));
  }

  bool has_witness(const Witness& w) const {
    return std::binary_search(witnesses.begin(), witnesses.end(), w);
  }
};

/// Colexification graph over synsets. Edges are keyed by canonical pair in
/// an ordered map, so every traversal and export is deterministic.
struct ColexGraph {
  std::set<SynsetId> nodes;
  std::map<SynsetPair, ColexEdge> edges;

  std::size_t edge_count() const { return edges.size(); }
  std::size_t node_count() const { return nodes.size(); }

  std::size_t witness_total() const {
    std::size_t n = 0;
    for (const auto& [pair, edge] : edges) n += edge.witnesses.size();
    return n;
  }

  /// Edge lookup; (a, b) and (b, a) return the same edge.
  const ColexEdge* find(const SynsetId& a, const SynsetId& b) const {
    auto it = edges.find(make_canonical_pair(a, b));
    return it == edges.end() ? nullptr : &it->second;
  }
};

/// Builds the colexification graph: for every language and lemma whose
/// synset set S has |S| >= 2, each 2-subset of S becomes (or extends) an
/// edge witnessed by that (lemma, language).
inline ColexGraph construct_graph(std::span<const LexEntry> entries) {
  ColexGraph graph;

  // Group entries by (language, lemma) via an index sort; avoids copying
  // the entry strings and keeps peak memory flat for large corpora.
  std::vector<std::uint32_t> order(entries.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const LexEntry& ea = entries[a];
    const LexEntry& eb = entries[b];
    if (int c = ea.language.compare(eb.language)) return c < 0;
    if (int c = ea.lemma.compare(eb.lemma)) return c < 0;
    return ea.synset < eb.synset;
  });

  std::vector<const SynsetId*> group;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    const LexEntry& head = entries[order[i]];
    group.clear();
    while (j < order.size() && entries[order[j]].language == head.language &&
           entries[order[j]].lemma == head.lemma) {
      group.push_back(&entries[order[j]].synset);
      ++j;
    }
    // Synsets arrive sorted from the index sort; drop duplicates.
    group.erase(std::unique(group.begin(), group.end(),
                            [](const SynsetId* a, const SynsetId* b) { return *a == *b; }),
                group.end());
    if (group.size() >= 2) {
      for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          SynsetPair key{*group[a], *group[b]};  // already canonical (sorted group)
          auto [it, inserted] = graph.edges.try_emplace(key);
          if (inserted) {
            it->second.pair = key;
            graph.nodes.insert(key.first);
            graph.nodes.insert(key.second);
          }
          it->second.add_witness(head.lemma, head.language);
        }
      }
    }
    i = j;
  }
  return graph;
}

inline constexpr std::size_t kOracleScaleLimit = 10000;

using WitnessRelation = std::set<std::tuple<SynsetId, SynsetId, std::string, std::string>>;

/// Test oracle for construct_graph: a quadratic scan over all entry pairs
/// with equal (language, lemma) and distinct synsets. Independent of the
/// grouped construction above by design; capped to oracle scale.
inline WitnessRelation brute_force_colex(std::span<const LexEntry> entries) {
  if (entries.size() > kOracleScaleLimit) {
    fail(Errc::oracle_scale_exceeded,
         "brute_force_colex supports at most " + std::to_string(kOracleScaleLimit) +
             " entries, got " + std::to_string(entries.size()));
  }
  WitnessRelation relation;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const LexEntry& a = entries[i];
      const LexEntry& b = entries[j];
      if (a.language != b.language || a.lemma != b.lemma) continue;
      if (a.synset == b.synset) continue;
      SynsetPair pair = make_canonical_pair(a.synset, b.synset);
      relation.emplace(pair.first, pair.second, a.lemma, a.language);
    }
  }
  return relation;
}

/// Flattens a graph into the same relation shape the oracle produces.
inline WitnessRelation witness_relation(const ColexGraph& graph) {
  WitnessRelation relation;
  for (const auto& [pair, edge] : graph.edges) {
    for (const auto& w : edge.witnesses) {
      relation.emplace(pair.first, pair.second, w.lemma, w.language);
    }
  }
  return relation;
}

/// Merges `other` into `target` (union of witness sets per edge). Used by
/// per-language sharded construction; the result equals single-pass build.
inline void merge_graphs(ColexGraph& target, const ColexGraph& other) {
  for (const auto& node : other.nodes) target.nodes.insert(node);
  for (const auto& [pair, edge] : other.edges) {
    auto [it, inserted] = target.edges.try_emplace(pair, edge);
    if (!inserted) {
      for (const auto& w : edge.witnesses) it->second.add_witness(w.lemma, w.language);
    }
  }
}

}  // namespace colex
