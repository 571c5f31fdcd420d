#pragma once

// Deterministic synthetic corpora for property tests and the acceptance
// suite: random lexicons for the graph-oracle equivalence runs, a corpus
// with a planted concreteness/colexification relationship for the sign-
// recovery check, and random rating triples.

#include <string>
#include <vector>

#include "colex/records.hpp"
#include "support/vector_gen.hpp"

namespace colex_test {

/// Random lexicon: up to max_langs languages, max_lemmas lemma shapes per
/// language, synsets drawn from a shared pool (mixed POS and sense numbers).
inline std::vector<colex::LexEntry> random_corpus(std::uint64_t seed, std::size_t max_langs = 8,
                                                  std::size_t max_lemmas = 60,
                                                  std::size_t max_synsets = 40) {
  Rng rng(seed);
  const std::size_t n_langs = 1 + rng.below(max_langs);
  const std::size_t n_lemmas = 1 + rng.below(max_lemmas);
  const std::size_t n_synsets = 2 + rng.below(max_synsets - 1);

  std::vector<colex::SynsetId> pool;
  pool.reserve(n_synsets);
  const char pos_tags[] = {'n', 'v', 'a'};
  for (std::size_t s = 0; s < n_synsets; ++s) {
    colex::SynsetId id;
    id.sense_word = "w" + std::to_string(rng.below(n_synsets));
    id.pos = pos_tags[rng.below(3)];
    id.sense = 1 + static_cast<std::uint32_t>(rng.below(3));
    pool.push_back(std::move(id));
  }

  std::vector<colex::LexEntry> entries;
  for (std::size_t l = 0; l < n_langs; ++l) {
    std::string language = "lg" + std::to_string(l);
    for (std::size_t m = 0; m < n_lemmas; ++m) {
      if (rng.below(4) == 0) continue;  // lemma absent from this language
      std::string lemma = "lem" + std::to_string(m);
      const std::size_t k = 1 + rng.below(4);  // 1..4 synsets for this lemma
      std::vector<const colex::SynsetId*> chosen;
      for (std::size_t c = 0; c < k; ++c) {
        const colex::SynsetId* candidate = &pool[rng.below(pool.size())];
        bool seen = false;
        for (const auto* p : chosen) {
          if (*p == *candidate) seen = true;
        }
        if (!seen) chosen.push_back(candidate);
      }
      for (const auto* synset : chosen) {
        entries.push_back(colex::LexEntry{language, lemma, *synset});
      }
    }
  }
  return entries;
}

/// Corpus in which concept pairs closer in concreteness colexify more
/// often: pair (i, j) receives ceil(8 / (1 + 2 |conc_i - conc_j|)) - 1
/// witnesses, each from a fresh lemma. Returns the entries plus the
/// concreteness rating list for the planted concepts.
struct PlantedCorpus {
  std::vector<colex::LexEntry> entries;
  std::vector<colex::RatingRecord> ratings;
};

inline PlantedCorpus planted_sign_corpus(std::uint64_t seed, std::size_t n_concepts = 40,
                                         std::size_t n_langs = 6) {
  Rng rng(seed);
  PlantedCorpus corpus;
  std::vector<double> conc(n_concepts);
  for (std::size_t i = 0; i < n_concepts; ++i) {
    conc[i] = 1.0 + 4.0 * (static_cast<double>(i) / static_cast<double>(n_concepts - 1));
    colex::RatingRecord r;
    r.concept_word = "c" + std::to_string(i);
    r.concreteness = conc[i];
    corpus.ratings.push_back(std::move(r));
  }
  std::size_t lemma_counter = 0;
  for (std::size_t i = 0; i < n_concepts; ++i) {
    for (std::size_t j = i + 1; j < n_concepts; ++j) {
      const double dist = conc[j] - conc[i] >= 0 ? conc[j] - conc[i] : conc[i] - conc[j];
      const std::size_t witnesses = static_cast<std::size_t>(8.0 / (1.0 + 2.0 * dist));
      for (std::size_t w = 0; w < witnesses; ++w) {
        std::string language = "pl" + std::to_string(rng.below(n_langs));
        std::string lemma = "x" + std::to_string(lemma_counter++);
        colex::SynsetId s1{"c" + std::to_string(i), 'n', 1};
        colex::SynsetId s2{"c" + std::to_string(j), 'n', 1};
        corpus.entries.push_back(colex::LexEntry{language, lemma, std::move(s1)});
        corpus.entries.push_back(colex::LexEntry{language, std::move(lemma), std::move(s2)});
      }
    }
  }
  return corpus;
}

}  // namespace colex_test
