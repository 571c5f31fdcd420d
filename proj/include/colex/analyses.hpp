#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "colex/concepts.hpp"
#include "colex/ingest.hpp"
#include "colex/phonology.hpp"
#include "colex/ratings.hpp"
#include "colex/stats.hpp"

namespace colex {

struct AnalysisResult {
  std::vector<CorrelationReport> reports;
  std::vector<SkippedCell> skipped;
};

inline constexpr const char* kAllGroup = "ALL";

namespace detail {

/// Runs one correlation cell, converting statistic errors into skips.
template <typename Fn>
inline void run_cell(AnalysisResult& result, const std::string& group, const std::string& var_x,
                     const std::string& var_y, std::size_t n, Fn&& compute) {
  try {
    CorrelationReport rep;
    rep.group = group;
    rep.variable_x = var_x;
    rep.variable_y = var_y;
    rep.result = compute();
    result.reports.push_back(std::move(rep));
  } catch (const Error& e) {
    result.skipped.push_back(SkippedCell{group, var_x, var_y, errc_code(e.code()), n});
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Colexification counts vs. rating distances (concept pairs, ungrouped)
// ---------------------------------------------------------------------------

/// 12 cells: {n_colex, n_lemmas, n_languages} x {conc, v, a, d} over all
/// concept pairs that carry the given distance; one sample per pair.
inline AnalysisResult analyze_colex_distance(std::span<const ConceptPairRecord> records,
                                             const std::map<ConceptKey, ConceptRatings>& ratings,
                                             double alpha = 0.05, double threshold = 0.1) {
  std::vector<PairDistances> distances;
  distances.reserve(records.size());
  static const ConceptRatings kEmpty{};
  for (const auto& rec : records) {
    auto it1 = ratings.find(rec.concept1);
    auto it2 = ratings.find(rec.concept2);
    distances.push_back(pair_distances(it1 == ratings.end() ? kEmpty : it1->second,
                                       it2 == ratings.end() ? kEmpty : it2->second));
  }

  struct CountVar {
    const char* name;
    std::size_t ConceptPairRecord::* member;
  };
  static constexpr std::array<CountVar, 3> kCountVars = {{
      {"n_colex", &ConceptPairRecord::n_colex},
      {"n_lemmas", &ConceptPairRecord::n_lemmas},
      {"n_languages", &ConceptPairRecord::n_languages},
  }};

  AnalysisResult result;
  for (const auto& var : kCountVars) {
    for (RatingDim dim : kRatingDims) {
      std::vector<double> xs;
      std::vector<double> ys;
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& d = distances[i].get(dim);
        if (!d) continue;
        xs.push_back(static_cast<double>(records[i].*(var.member)));
        ys.push_back(*d);
      }
      detail::run_cell(result, kAllGroup, var.name, distance_name(dim), xs.size(),
                       [&] { return pearson_r(xs, ys); });
    }
  }
  result.reports = bonferroni(std::move(result.reports), alpha, 1);
  mark_reported(result.reports, threshold);
  return result;
}

// ---------------------------------------------------------------------------
// Distance-vs-distance correlation matrix
// ---------------------------------------------------------------------------

struct DistanceMatrix {
  // cells[i][j] over kRatingDims order; empty optional = skipped
  std::array<std::array<std::optional<CorrelationResult>, 4>, 4> cells;
  std::vector<SkippedCell> skipped;
};

/// Symmetric 4x4 correlation matrix among the distance dimensions, each
/// cell over the pairs where both distances are present. Diagonal r = 1.
inline DistanceMatrix analyze_distance_matrix(std::span<const ConceptPairRecord> records,
                                              const std::map<ConceptKey, ConceptRatings>& ratings) {
  std::vector<PairDistances> distances;
  distances.reserve(records.size());
  static const ConceptRatings kEmpty{};
  for (const auto& rec : records) {
    auto it1 = ratings.find(rec.concept1);
    auto it2 = ratings.find(rec.concept2);
    distances.push_back(pair_distances(it1 == ratings.end() ? kEmpty : it1->second,
                                       it2 == ratings.end() ? kEmpty : it2->second));
  }

  DistanceMatrix matrix;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      RatingDim di = kRatingDims[i];
      RatingDim dj = kRatingDims[j];
      std::vector<double> xs;
      std::vector<double> ys;
      for (const auto& d : distances) {
        const auto& a = d.get(di);
        const auto& b = d.get(dj);
        if (a && b) {
          xs.push_back(*a);
          ys.push_back(*b);
        }
      }
      if (i == j) {
        if (xs.empty()) {
          matrix.skipped.push_back(
              SkippedCell{kAllGroup, distance_name(di), distance_name(dj), "E_FEW_SAMPLES", 0});
        } else {
          CorrelationResult res;
          res.r = 1.0;
          res.p = 0.0;
          res.n = xs.size();
          res.dof = xs.size() >= 2 ? xs.size() - 2 : 0;
          matrix.cells[i][j] = res;
        }
        continue;
      }
      try {
        CorrelationResult res = pearson_r(xs, ys);
        matrix.cells[i][j] = res;
        matrix.cells[j][i] = res;
      } catch (const Error& e) {
        matrix.skipped.push_back(SkippedCell{kAllGroup, distance_name(di), distance_name(dj),
                                             errc_code(e.code()), xs.size()});
      }
    }
  }
  return matrix;
}

/// Flattens the matrix (upper triangle incl. diagonal) into report rows.
inline AnalysisResult distance_matrix_reports(const DistanceMatrix& matrix, double alpha = 0.05,
                                              double threshold = 0.1) {
  AnalysisResult result;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      if (!matrix.cells[i][j]) continue;
      CorrelationReport rep;
      rep.group = kAllGroup;
      rep.variable_x = distance_name(kRatingDims[i]);
      rep.variable_y = distance_name(kRatingDims[j]);
      rep.result = *matrix.cells[i][j];
      result.reports.push_back(std::move(rep));
    }
  }
  result.skipped = matrix.skipped;
  result.reports = bonferroni(std::move(result.reports), alpha, 1);
  mark_reported(result.reports, threshold);
  return result;
}

// ---------------------------------------------------------------------------
// Per-lemma samples for the family-grouped analyses
// ---------------------------------------------------------------------------

/// One rated lemma: its phonemes (when joined) and, per rating dimension,
/// the mean over its distinct rated concepts.
struct LemmaSample {
  std::string language;
  std::string lemma;
  std::optional<PhonemeSeq> phonemes;
  std::array<std::optional<double>, 4> ratings;  // indexed by RatingDim order

  const std::optional<double>& rating(RatingDim d) const {
    return ratings[static_cast<std::size_t>(d)];
  }
};

inline std::vector<LemmaSample> build_lemma_samples(
    std::span<const ConceptPairRecord> records, const PhonologyJoin& phonemes,
    const std::map<std::string, RatingRecord>& ratings_by_word, const TextNorm& norm = {}) {
  std::map<std::pair<std::string, std::string>, std::set<std::string>> concepts_of;
  for (const auto& rec : records) {
    for (const auto& w : rec.witnesses) {
      auto& set = concepts_of[{w.language, w.lemma}];
      set.insert(rec.concept1.word);
      set.insert(rec.concept2.word);
    }
  }

  std::vector<LemmaSample> samples;
  samples.reserve(concepts_of.size());
  for (const auto& [key, concepts] : concepts_of) {
    LemmaSample sample;
    sample.language = key.first;
    sample.lemma = key.second;
    if (const PhonemeSeq* seq = phonemes.find(key.first, norm.join_key(key.second))) {
      sample.phonemes = *seq;
    }
    std::array<double, 4> sums{};
    std::array<std::size_t, 4> counts{};
    for (const auto& word : concepts) {
      auto it = ratings_by_word.find(word);
      if (it == ratings_by_word.end()) continue;
      const RatingRecord& r = it->second;
      const std::array<const std::optional<double>*, 4> values = {&r.concreteness, &r.valence,
                                                                  &r.arousal, &r.dominance};
      for (std::size_t d = 0; d < 4; ++d) {
        if (*values[d]) {
          sums[d] += **values[d];
          ++counts[d];
        }
      }
    }
    for (std::size_t d = 0; d < 4; ++d) {
      if (counts[d]) sample.ratings[d] = sums[d] / static_cast<double>(counts[d]);
    }
    samples.push_back(std::move(sample));
  }
  return samples;  // ordered by (language, lemma) via the map
}

namespace detail {

struct FamilyBucket {
  std::vector<const LemmaSample*> samples;
  std::set<std::string> languages;
};

/// Family -> rated samples with phonemes, for one rating dimension.
inline std::map<std::string, FamilyBucket> bucket_by_family(std::span<const LemmaSample> samples,
                                                            const FamilyMap& families,
                                                            RatingDim dim) {
  std::map<std::string, FamilyBucket> buckets;
  for (const auto& s : samples) {
    if (!s.phonemes || !s.rating(dim)) continue;
    FamilyBucket& bucket = buckets[families.family_of(s.language)];
    bucket.samples.push_back(&s);
    bucket.languages.insert(s.language);
  }
  return buckets;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Initial/last phoneme vs. rating, per language family
// ---------------------------------------------------------------------------

/// Point-biserial correlation between each position phoneme's indicator
/// and the lemma rating, per family. Bonferroni divisor = number of
/// languages in the family; n_phonemes = the family's segment inventory.
inline AnalysisResult analyze_phoneme_position(std::span<const LemmaSample> samples,
                                               const FamilyMap& families, RatingDim dim,
                                               PhonemePosition position, double alpha = 0.05,
                                               double threshold = 0.1) {
  AnalysisResult result;
  for (const auto& [family, bucket] : detail::bucket_by_family(samples, families, dim)) {
    std::set<std::string> inventory;
    std::set<std::string> at_position;
    std::vector<double> ys;
    ys.reserve(bucket.samples.size());
    for (const LemmaSample* s : bucket.samples) {
      for (const auto& seg : s->phonemes->segments) inventory.insert(seg);
      at_position.insert(position == PhonemePosition::initial ? s->phonemes->initial()
                                                              : s->phonemes->last());
      ys.push_back(*s->rating(dim));
    }

    std::vector<CorrelationReport> family_reports;
    for (const auto& phoneme : at_position) {
      std::vector<bool> indicator(bucket.samples.size());
      for (std::size_t i = 0; i < bucket.samples.size(); ++i) {
        const PhonemeSeq& seq = *bucket.samples[i]->phonemes;
        const std::string& seg =
            position == PhonemePosition::initial ? seq.initial() : seq.last();
        indicator[i] = (seg == phoneme);
      }
      std::string var_x = std::string(position_name(position)) + "=" + phoneme;
      try {
        CorrelationReport rep;
        rep.group = family;
        rep.variable_x = var_x;
        rep.variable_y = rating_dim_name(dim);
        rep.result = point_biserial(indicator, ys);
        rep.n_phonemes = inventory.size();
        family_reports.push_back(std::move(rep));
      } catch (const Error& e) {
        result.skipped.push_back(
            SkippedCell{family, var_x, rating_dim_name(dim), errc_code(e.code()), ys.size()});
      }
    }
    family_reports = bonferroni(std::move(family_reports), alpha, bucket.languages.size());
    for (auto& rep : family_reports) result.reports.push_back(std::move(rep));
  }
  mark_reported(result.reports, threshold);
  return result;
}

// ---------------------------------------------------------------------------
// Articulatory feature counts vs. concreteness, per language family
// ---------------------------------------------------------------------------

inline AnalysisResult analyze_features(std::span<const LemmaSample> samples,
                                       const FeatureTable& table, const FamilyMap& families,
                                       double alpha = 0.05, double threshold = 0.1) {
  AnalysisResult result;
  const RatingDim dim = RatingDim::concreteness;
  for (const auto& [family, bucket] : detail::bucket_by_family(samples, families, dim)) {
    std::vector<LemmaFeatureProfile> profiles;
    std::vector<double> ys;
    profiles.reserve(bucket.samples.size());
    for (const LemmaSample* s : bucket.samples) {
      // Unknown segments contribute zero counts, matching lenient builds.
      profiles.push_back(lemma_profile(*s->phonemes, table, Mode::lenient, nullptr));
      ys.push_back(*s->rating(dim));
    }

    std::vector<CorrelationReport> family_reports;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      std::vector<double> xs(profiles.size());
      for (std::size_t i = 0; i < profiles.size(); ++i) {
        xs[i] = static_cast<double>(profiles[i].counts[f]);
      }
      std::string var_x = "feature=" + std::string(feature_names()[f]);
      try {
        CorrelationReport rep;
        rep.group = family;
        rep.variable_x = var_x;
        rep.variable_y = rating_dim_name(dim);
        rep.result = pearson_r(xs, ys);
        family_reports.push_back(std::move(rep));
      } catch (const Error& e) {
        result.skipped.push_back(
            SkippedCell{family, var_x, rating_dim_name(dim), errc_code(e.code()), ys.size()});
      }
    }
    family_reports = bonferroni(std::move(family_reports), alpha, bucket.languages.size());
    for (auto& rep : family_reports) result.reports.push_back(std::move(rep));
  }
  mark_reported(result.reports, threshold);
  return result;
}

// ---------------------------------------------------------------------------
// TTR / segment length vs. rating, per language family
// ---------------------------------------------------------------------------

inline AnalysisResult analyze_ttr_len(std::span<const LemmaSample> samples,
                                      const FamilyMap& families, RatingDim dim,
                                      double alpha = 0.05, double threshold = 0.1) {
  AnalysisResult result;
  for (const auto& [family, bucket] : detail::bucket_by_family(samples, families, dim)) {
    std::vector<double> ttrs;
    std::vector<double> lens;
    std::vector<double> ys;
    for (const LemmaSample* s : bucket.samples) {
      PhonoMetrics m = metrics_of(*s->phonemes);
      ttrs.push_back(m.ttr);
      lens.push_back(static_cast<double>(m.seg_len));
      ys.push_back(*s->rating(dim));
    }

    std::vector<CorrelationReport> family_reports;
    const std::array<std::pair<const char*, const std::vector<double>*>, 2> vars = {
        {{"ttr", &ttrs}, {"seg_len", &lens}}};
    for (const auto& [name, xs] : vars) {
      try {
        CorrelationReport rep;
        rep.group = family;
        rep.variable_x = name;
        rep.variable_y = rating_dim_name(dim);
        rep.result = pearson_r(*xs, ys);
        family_reports.push_back(std::move(rep));
      } catch (const Error& e) {
        result.skipped.push_back(
            SkippedCell{family, name, rating_dim_name(dim), errc_code(e.code()), ys.size()});
      }
    }
    family_reports = bonferroni(std::move(family_reports), alpha, bucket.languages.size());
    for (auto& rep : family_reports) result.reports.push_back(std::move(rep));
  }
  mark_reported(result.reports, threshold);
  return result;
}

}  // namespace colex
