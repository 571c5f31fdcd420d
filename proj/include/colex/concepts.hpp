#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "colex/graph.hpp"
#include "colex/records.hpp"
#include "colex/text.hpp"

namespace colex {

/// Concept derivation options. With underscores_to_space set, multiword
/// sense words like "Santa_Claus" become the concept "santa claus" and the
/// same mapping is applied to join keys elsewhere.
struct TextNorm {
  bool underscores_to_space = false;

  std::string concept_word(const std::string& sense_word) const {
    std::string w = ascii_lower(sense_word);
    if (underscores_to_space) {
      for (char& c : w) {
        if (c == '_') c = ' ';
      }
    }
    return w;
  }

  std::string join_key(const std::string& s) const {
    if (!underscores_to_space) return s;
    std::string w = s;
    for (char& c : w) {
      if (c == '_') c = ' ';
    }
    return w;
  }
};

/// One concept-pair row of the first-sense concept graph.
struct ConceptPairRecord {
  ConceptKey concept1;  // canonical order: concept1 < concept2
  ConceptKey concept2;
  SynsetId synset1;  // representative source synsets, aligned with concepts
  SynsetId synset2;
  std::vector<Witness> witnesses;  // sorted, unique
  std::size_t n_colex = 0;      // |witnesses|
  std::size_t n_lemmas = 0;     // distinct lemma strings
  std::size_t n_languages = 0;  // distinct language codes
};

/// Keeps only edges whose endpoints are both first senses, collapses
/// synsets to concepts, and counts witnesses/lemmas/languages per pair.
/// Output is sorted by (concept1, concept2).
inline std::vector<ConceptPairRecord> derive_concept_graph(const ColexGraph& graph,
                                                           const TextNorm& norm = {}) {
  struct Accum {
    SynsetId synset1;
    SynsetId synset2;
    std::set<Witness> witnesses;
  };
  std::map<std::pair<ConceptKey, ConceptKey>, Accum> pairs;

  for (const auto& [pair, edge] : graph.edges) {
    if (pair.first.sense != 1 || pair.second.sense != 1) continue;
    ConceptKey c1{norm.concept_word(pair.first.sense_word), pair.first.pos};
    ConceptKey c2{norm.concept_word(pair.second.sense_word), pair.second.pos};
    SynsetId s1 = pair.first;
    SynsetId s2 = pair.second;
    if (c2 < c1) {
      std::swap(c1, c2);
      std::swap(s1, s2);
    }
    auto [it, inserted] = pairs.try_emplace({std::move(c1), std::move(c2)});
    Accum& acc = it->second;
    if (inserted) {
      acc.synset1 = s1;
      acc.synset2 = s2;
    } else {
      // Distinct synset pairs can collapse onto one concept pair (case or
      // underscore variants); keep the lexicographically smallest synsets.
      if (s1 < acc.synset1) acc.synset1 = s1;
      if (s2 < acc.synset2) acc.synset2 = s2;
    }
    acc.witnesses.insert(edge.witnesses.begin(), edge.witnesses.end());
  }

  std::vector<ConceptPairRecord> records;
  records.reserve(pairs.size());
  for (auto& [key, acc] : pairs) {
    ConceptPairRecord rec;
    rec.concept1 = key.first;
    rec.concept2 = key.second;
    rec.synset1 = std::move(acc.synset1);
    rec.synset2 = std::move(acc.synset2);
    rec.witnesses.assign(acc.witnesses.begin(), acc.witnesses.end());
    rec.n_colex = rec.witnesses.size();
    std::set<std::string_view> lemmas;
    std::set<std::string_view> languages;
    for (const auto& w : rec.witnesses) {
      lemmas.insert(w.lemma);
      languages.insert(w.language);
    }
    rec.n_lemmas = lemmas.size();
    rec.n_languages = languages.size();
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace colex
