#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>

#include "colex/concepts.hpp"
#include "colex/graph.hpp"
#include "colex/ratings.hpp"

namespace colex {

/// Dataset-level statistics, one value per column of the summary artifact.
struct SummaryTable {
  std::size_t entries = 0;            // lexicon entries after dedup
  std::size_t colex_patterns = 0;     // colexification instances (witness total)
  std::size_t synsets = 0;            // synset nodes in the graph
  std::size_t lexicalizations = 0;    // distinct lemma strings
  std::size_t phoneme_lemma_pairs = 0;  // distinct (language, lemma) with phonemes
  std::size_t concepts = 0;           // distinct concepts in the concept graph
  std::size_t concepts_with_affect = 0;
  std::size_t concepts_with_concreteness = 0;
};

inline SummaryTable summary_stats(std::span<const LexEntry> entries, const ColexGraph& graph,
                                  std::span<const ConceptPairRecord> records,
                                  const PhonologyJoin& phonemes,
                                  const std::map<ConceptKey, ConceptRatings>& ratings) {
  SummaryTable t;
  t.entries = entries.size();
  t.colex_patterns = graph.witness_total();
  t.synsets = graph.node_count();

  std::set<std::string_view> lemmas;
  for (const auto& e : entries) lemmas.insert(e.lemma);
  t.lexicalizations = lemmas.size();

  t.phoneme_lemma_pairs = phonemes.size();

  std::set<ConceptKey> concepts;
  for (const auto& rec : records) {
    concepts.insert(rec.concept1);
    concepts.insert(rec.concept2);
  }
  t.concepts = concepts.size();
  for (const auto& key : concepts) {
    auto it = ratings.find(key);
    if (it == ratings.end()) continue;
    if (it->second.has_affect()) ++t.concepts_with_affect;
    if (it->second.concreteness) ++t.concepts_with_concreteness;
  }
  return t;
}

}  // namespace colex
