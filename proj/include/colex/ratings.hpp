#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "colex/concepts.hpp"
#include "colex/phonology.hpp"
#include "colex/records.hpp"

namespace colex {

enum class RatingDim { concreteness, valence, arousal, dominance };

inline constexpr std::array<RatingDim, 4> kRatingDims = {
    RatingDim::concreteness, RatingDim::valence, RatingDim::arousal, RatingDim::dominance};

inline const char* rating_dim_name(RatingDim d) {
  switch (d) {
    case RatingDim::concreteness: return "concreteness";
    case RatingDim::valence: return "valence";
    case RatingDim::arousal: return "arousal";
    case RatingDim::dominance: return "dominance";
  }
  return "?";
}

inline const char* distance_name(RatingDim d) {
  switch (d) {
    case RatingDim::concreteness: return "conc_dist";
    case RatingDim::valence: return "v_dist";
    case RatingDim::arousal: return "a_dist";
    case RatingDim::dominance: return "d_dist";
  }
  return "?";
}

/// Norm ratings attached to one concept; dimensions are independent.
struct ConceptRatings {
  ConceptKey concept_word;
  std::optional<double> concreteness;
  std::optional<double> valence;
  std::optional<double> arousal;
  std::optional<double> dominance;

  const std::optional<double>& get(RatingDim d) const {
    switch (d) {
      case RatingDim::concreteness: return concreteness;
      case RatingDim::valence: return valence;
      case RatingDim::arousal: return arousal;
      case RatingDim::dominance: return dominance;
    }
    return concreteness;
  }

  bool has_any() const { return concreteness || valence || arousal || dominance; }
  bool has_affect() const { return valence || arousal || dominance; }
};

/// Absolute rating distances of a colexified concept pair. A distance is
/// present exactly when both endpoint ratings in that dimension are.
struct PairDistances {
  std::optional<double> conc_dist;
  std::optional<double> v_dist;
  std::optional<double> a_dist;
  std::optional<double> d_dist;

  const std::optional<double>& get(RatingDim d) const {
    switch (d) {
      case RatingDim::concreteness: return conc_dist;
      case RatingDim::valence: return v_dist;
      case RatingDim::arousal: return a_dist;
      case RatingDim::dominance: return d_dist;
    }
    return conc_dist;
  }
};

/// One dataset row: a witness of one colexified concept pair.
struct ColexRecord {
  std::string lemma;
  std::string language;
  std::optional<PhonemeSeq> phonemes;
  SynsetId synset1;
  SynsetId synset2;
  std::string concept1;  // display words, aligned with synset1/synset2
  std::string concept2;
  PairDistances distances;
};

/// Word-keyed merge of rating records from all sources. Later sources
/// fill (or overwrite) individual dimensions; norm lists are word-keyed,
/// so POS plays no role in this join.
inline std::map<std::string, RatingRecord> merge_ratings(std::span<const RatingRecord> ratings,
                                                         const TextNorm& norm = {}) {
  std::map<std::string, RatingRecord> by_word;
  for (const auto& r : ratings) {
    std::string key = norm.join_key(r.concept_word);
    auto [it, inserted] = by_word.try_emplace(key, r);
    it->second.concept_word = key;
    if (!inserted) {
      if (r.concreteness) it->second.concreteness = r.concreteness;
      if (r.valence) it->second.valence = r.valence;
      if (r.arousal) it->second.arousal = r.arousal;
      if (r.dominance) it->second.dominance = r.dominance;
    }
  }
  return by_word;
}

/// Joins a word-keyed rating map onto every concept appearing in the
/// concept graph. Concepts absent from the map keep absent dimensions.
inline std::map<ConceptKey, ConceptRatings> attach_ratings_by_word(
    std::span<const ConceptPairRecord> records, const std::map<std::string, RatingRecord>& by_word) {
  std::map<ConceptKey, ConceptRatings> out;
  auto attach = [&](const ConceptKey& key) {
    if (out.count(key)) return;
    ConceptRatings cr;
    cr.concept_word = key;
    auto it = by_word.find(key.word);
    if (it != by_word.end()) {
      cr.concreteness = it->second.concreteness;
      cr.valence = it->second.valence;
      cr.arousal = it->second.arousal;
      cr.dominance = it->second.dominance;
    }
    out.emplace(key, std::move(cr));
  };
  for (const auto& rec : records) {
    attach(rec.concept1);
    attach(rec.concept2);
  }
  return out;
}

inline std::map<ConceptKey, ConceptRatings> attach_ratings(
    std::span<const ConceptPairRecord> records, std::span<const RatingRecord> ratings,
    const TextNorm& norm = {}) {
  return attach_ratings_by_word(records, merge_ratings(ratings, norm));
}

/// Per dimension: |x1 - x2| when both ratings are present, absent otherwise.
inline PairDistances pair_distances(const ConceptRatings& r1, const ConceptRatings& r2) {
  auto dist = [](const std::optional<double>& a,
                 const std::optional<double>& b) -> std::optional<double> {
    if (a && b) return std::fabs(*a - *b);
    return std::nullopt;
  };
  PairDistances d;
  d.conc_dist = dist(r1.concreteness, r2.concreteness);
  d.v_dist = dist(r1.valence, r2.valence);
  d.a_dist = dist(r1.arousal, r2.arousal);
  d.d_dist = dist(r1.dominance, r2.dominance);
  return d;
}

/// Builds the dataset: one row per (concept pair, witness), sorted by
/// (concept1, concept2, language, lemma).
inline std::vector<ColexRecord> build_dataset(std::span<const ConceptPairRecord> records,
                                              const std::map<ConceptKey, ConceptRatings>& ratings,
                                              const PhonologyJoin& phonemes,
                                              const TextNorm& norm = {}) {
  std::vector<ColexRecord> rows;
  for (const auto& rec : records) {
    static const ConceptRatings kEmpty{};
    auto it1 = ratings.find(rec.concept1);
    auto it2 = ratings.find(rec.concept2);
    PairDistances distances = pair_distances(it1 == ratings.end() ? kEmpty : it1->second,
                                             it2 == ratings.end() ? kEmpty : it2->second);

    std::vector<Witness> by_row = rec.witnesses;
    std::sort(by_row.begin(), by_row.end(), [](const Witness& a, const Witness& b) {
      if (int c = a.language.compare(b.language)) return c < 0;
      return a.lemma < b.lemma;
    });
    for (const auto& w : by_row) {
      ColexRecord row;
      row.lemma = w.lemma;
      row.language = w.language;
      if (const PhonemeSeq* seq = phonemes.find(w.language, norm.join_key(w.lemma))) {
        row.phonemes = *seq;
      }
      row.synset1 = rec.synset1;
      row.synset2 = rec.synset2;
      row.concept1 = rec.concept1.word;
      row.concept2 = rec.concept2.word;
      row.distances = distances;
      rows.push_back(std::move(row));
    }
  }
  // Sort on the displayed columns; synsets break ties between concepts
  // that share a word across POS tags.
  std::sort(rows.begin(), rows.end(), [](const ColexRecord& a, const ColexRecord& b) {
    if (int c = a.concept1.compare(b.concept1)) return c < 0;
    if (int c = a.concept2.compare(b.concept2)) return c < 0;
    if (int c = a.language.compare(b.language)) return c < 0;
    if (int c = a.lemma.compare(b.lemma)) return c < 0;
    if (a.synset1 != b.synset1) return a.synset1 < b.synset1;
    return a.synset2 < b.synset2;
  });
  return rows;
}

enum class PhonemePosition { initial, last };

inline const char* position_name(PhonemePosition p) {
  return p == PhonemePosition::initial ? "initial" : "last";
}

/// Mean ratings of the concepts expressed by lemmas carrying a given
/// phoneme at a given position, grouped by (phoneme, language). Each
/// concept counts once per group regardless of how many pairs repeat it.
struct PhonemeRating {
  std::string phoneme;
  std::string language;
  PhonemePosition position = PhonemePosition::initial;
  std::optional<double> mean_concreteness;
  std::optional<double> mean_valence;
  std::optional<double> mean_arousal;
  std::optional<double> mean_dominance;
  std::size_t n = 0;  // distinct rated concepts in the group
};

inline std::vector<PhonemeRating> phoneme_level_ratings(
    std::span<const ColexRecord> dataset, const std::map<std::string, RatingRecord>& ratings_by_word,
    PhonemePosition position) {
  std::map<std::pair<std::string, std::string>, std::set<std::string>> groups;  // (lang, phoneme)
  for (const auto& row : dataset) {
    if (!row.phonemes) continue;
    const std::string& phoneme = position == PhonemePosition::initial ? row.phonemes->initial()
                                                                      : row.phonemes->last();
    auto& concepts = groups[{row.language, phoneme}];
    concepts.insert(row.concept1);
    concepts.insert(row.concept2);
  }

  std::vector<PhonemeRating> out;
  for (const auto& [key, concepts] : groups) {
    PhonemeRating pr;
    pr.language = key.first;
    pr.phoneme = key.second;
    pr.position = position;

    std::array<double, 4> sums{};
    std::array<std::size_t, 4> counts{};
    std::set<std::string> rated;
    for (const auto& word : concepts) {
      auto it = ratings_by_word.find(word);
      if (it == ratings_by_word.end()) continue;
      const RatingRecord& r = it->second;
      const std::array<const std::optional<double>*, 4> values = {&r.concreteness, &r.valence,
                                                                  &r.arousal, &r.dominance};
      bool any = false;
      for (std::size_t d = 0; d < 4; ++d) {
        if (*values[d]) {
          sums[d] += **values[d];
          ++counts[d];
          any = true;
        }
      }
      if (any) rated.insert(word);
    }
    pr.n = rated.size();
    if (pr.n == 0) continue;  // group has no rated concepts at all
    if (counts[0]) pr.mean_concreteness = sums[0] / static_cast<double>(counts[0]);
    if (counts[1]) pr.mean_valence = sums[1] / static_cast<double>(counts[1]);
    if (counts[2]) pr.mean_arousal = sums[2] / static_cast<double>(counts[2]);
    if (counts[3]) pr.mean_dominance = sums[3] / static_cast<double>(counts[3]);
    out.push_back(std::move(pr));
  }
  return out;
}

}  // namespace colex
