#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "colex/analyses.hpp"
#include "colex/concepts.hpp"
#include "colex/error.hpp"
#include "colex/format.hpp"
#include "colex/graph.hpp"
#include "colex/ingest.hpp"
#include "colex/phonology.hpp"
#include "colex/ratings.hpp"
#include "colex/summary.hpp"

namespace colex {

inline constexpr const char* kGraphArtifact = "graph.tsv";
inline constexpr const char* kDatasetArtifact = "dataset.tsv";
inline constexpr const char* kPhonologyArtifact = "phonology.tsv";
inline constexpr const char* kRatingsArtifact = "ratings.tsv";
inline constexpr const char* kSummaryArtifact = "summary.tsv";
inline constexpr const char* kManifestArtifact = "manifest.json";

namespace detail {

inline std::string join_segments(const std::vector<std::string>& segments) {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) out.push_back(' ');
    out += segments[i];
  }
  return out;
}

inline std::string shortest_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Concept graph dump
//   concept_1  concept_2  n_colex  n_lemmas  n_languages  witnesses
// Witnesses are semicolon-joined "lemma:language", sorted lexicographically.
// ---------------------------------------------------------------------------

inline std::string serialize_graph_dump(std::span<const ConceptPairRecord> records) {
  std::string out = "#concept_1\tconcept_2\tn_colex\tn_lemmas\tn_languages\twitnesses\n";
  for (const auto& rec : records) {
    std::vector<std::string> joined;
    joined.reserve(rec.witnesses.size());
    for (const auto& w : rec.witnesses) joined.push_back(w.lemma + ":" + w.language);
    std::sort(joined.begin(), joined.end());
    out += rec.concept1.word;
    out.push_back('\t');
    out += rec.concept2.word;
    out.push_back('\t');
    out += std::to_string(rec.n_colex);
    out.push_back('\t');
    out += std::to_string(rec.n_lemmas);
    out.push_back('\t');
    out += std::to_string(rec.n_languages);
    out.push_back('\t');
    for (std::size_t i = 0; i < joined.size(); ++i) {
      if (i) out.push_back(';');
      out += joined[i];
    }
    out.push_back('\n');
  }
  return out;
}

/// Reads a graph dump back into concept-pair records. Synset fields are
/// not part of the dump; POS defaults, and analyses never consult either.
inline std::vector<ConceptPairRecord> read_graph_dump(const std::string& path) {
  std::vector<ConceptPairRecord> records;
  std::int64_t total = 0;
  for (const auto& line : read_data_lines(path, &total)) {
    auto fields = split_view(line.text, '\t');
    if (fields.size() != 6) {
      fail(Errc::parse_error, path + ": expected 6 tab-separated fields", line.number);
    }
    ConceptPairRecord rec;
    rec.concept1 = ConceptKey{std::string(fields[0]), 'n'};
    rec.concept2 = ConceptKey{std::string(fields[1]), 'n'};
    auto n_colex = parse_int(fields[2]);
    auto n_lemmas = parse_int(fields[3]);
    auto n_languages = parse_int(fields[4]);
    if (!n_colex || !n_lemmas || !n_languages) {
      fail(Errc::parse_error, path + ": bad count field", line.number);
    }
    rec.n_colex = static_cast<std::size_t>(*n_colex);
    rec.n_lemmas = static_cast<std::size_t>(*n_lemmas);
    rec.n_languages = static_cast<std::size_t>(*n_languages);
    if (!fields[5].empty()) {
      for (std::string_view token : split_view(fields[5], ';')) {
        std::size_t colon = token.rfind(':');
        if (colon == std::string_view::npos) {
          fail(Errc::parse_error, path + ": bad witness '" + std::string(token) + "'", line.number);
        }
        rec.witnesses.push_back(
            Witness{std::string(token.substr(0, colon)), std::string(token.substr(colon + 1))});
      }
      std::sort(rec.witnesses.begin(), rec.witnesses.end());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Dataset export (column order of the dataset schema; "-" for absent)
// ---------------------------------------------------------------------------

inline std::string serialize_dataset(std::span<const ColexRecord> rows) {
  std::string out =
      "#sense_lemma\tlanguage\tphonemes\tsynset_1\tsynset_2\tconcept_1\tconcept_2"
      "\tconc_dist\tv_dist\ta_dist\td_dist\n";
  for (const auto& row : rows) {
    out += row.lemma;
    out.push_back('\t');
    out += row.language;
    out.push_back('\t');
    out += row.phonemes ? detail::join_segments(row.phonemes->segments) : kAbsentCell;
    out.push_back('\t');
    out += row.synset1.to_string();
    out.push_back('\t');
    out += row.synset2.to_string();
    out.push_back('\t');
    out += row.concept1;
    out.push_back('\t');
    out += row.concept2;
    for (RatingDim dim : kRatingDims) {
      out.push_back('\t');
      out += format_opt(row.distances.get(dim), 4);
    }
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Phonology dump
//   language  lemma  phonemes  seg_len  ttr  initial  last  <24 counts>
// ---------------------------------------------------------------------------

inline std::string serialize_phonology_dump(const PhonologyJoin& join, const FeatureTable& table) {
  std::string out = "#language\tlemma\tphonemes\tseg_len\tttr\tinitial\tlast";
  for (auto name : feature_names()) {
    out.push_back('\t');
    out += std::string(name);
  }
  out.push_back('\n');
  for (const auto& [key, seq] : join.by_key) {
    PhonoMetrics m = metrics_of(seq);
    LemmaFeatureProfile profile = lemma_profile(seq, table, Mode::lenient, nullptr);
    out += key.first;
    out.push_back('\t');
    out += key.second;
    out.push_back('\t');
    out += detail::join_segments(seq.segments);
    out.push_back('\t');
    out += std::to_string(m.seg_len);
    out.push_back('\t');
    out += format_fixed(m.ttr, 4);
    out.push_back('\t');
    out += seq.initial();
    out.push_back('\t');
    out += seq.last();
    for (std::uint32_t c : profile.counts) {
      out.push_back('\t');
      out += std::to_string(c);
    }
    out.push_back('\n');
  }
  return out;
}

/// Reloads the phonology dump. Only the segment column is consulted;
/// metrics and profiles are recomputed so no precision is lost to text.
inline PhonologyJoin read_phonology_dump(const std::string& path) {
  PhonologyJoin join;
  std::int64_t total = 0;
  for (const auto& line : read_data_lines(path, &total)) {
    auto fields = split_view(line.text, '\t');
    if (fields.size() != 7 + kFeatureCount) {
      fail(Errc::parse_error, path + ": expected " + std::to_string(7 + kFeatureCount) + " fields",
           line.number);
    }
    PhonemeSeq seq;
    for (std::string_view tok : split_view(fields[2], ' ')) {
      if (tok.empty()) fail(Errc::parse_error, path + ": empty segment", line.number);
      seq.segments.emplace_back(tok);
    }
    if (seq.segments.empty()) fail(Errc::parse_error, path + ": empty phonemes", line.number);
    join.by_key.emplace(std::make_pair(std::string(fields[0]), std::string(fields[1])),
                        std::move(seq));
  }
  return join;
}

// ---------------------------------------------------------------------------
// Concept ratings dump (shortest round-trip floats; exact reload)
// ---------------------------------------------------------------------------

inline std::string serialize_ratings_dump(const std::map<std::string, RatingRecord>& by_word) {
  std::string out = "#concept\tconcreteness\tvalence\tarousal\tdominance\n";
  for (const auto& [word, r] : by_word) {
    out += word;
    for (const auto& v : {r.concreteness, r.valence, r.arousal, r.dominance}) {
      out.push_back('\t');
      out += v ? detail::shortest_double(*v) : kAbsentCell;
    }
    out.push_back('\n');
  }
  return out;
}

inline std::map<std::string, RatingRecord> read_ratings_dump(const std::string& path) {
  std::map<std::string, RatingRecord> by_word;
  std::int64_t total = 0;
  for (const auto& line : read_data_lines(path, &total)) {
    auto fields = split_view(line.text, '\t');
    if (fields.size() != 5) {
      fail(Errc::parse_error, path + ": expected 5 tab-separated fields", line.number);
    }
    RatingRecord r;
    r.concept_word = std::string(fields[0]);
    auto cell = [&](std::string_view v) -> std::optional<double> {
      if (v == kAbsentCell) return std::nullopt;
      auto value = parse_double(v);
      if (!value) fail(Errc::parse_error, path + ": bad rating cell", line.number);
      return value;
    };
    r.concreteness = cell(fields[1]);
    r.valence = cell(fields[2]);
    r.arousal = cell(fields[3]);
    r.dominance = cell(fields[4]);
    by_word.emplace(r.concept_word, std::move(r));
  }
  return by_word;
}

// ---------------------------------------------------------------------------
// Summary artifact
// ---------------------------------------------------------------------------

inline std::string serialize_summary(const SummaryTable& t) {
  std::string out =
      "#entries\tcolex_patterns\tsynsets\tlexicalizations\tphoneme_lemma_pairs"
      "\tconcepts\tconcepts_with_affect\tconcepts_with_concreteness\n";
  out += std::to_string(t.entries);
  out.push_back('\t');
  out += std::to_string(t.colex_patterns);
  out.push_back('\t');
  out += std::to_string(t.synsets);
  out.push_back('\t');
  out += std::to_string(t.lexicalizations);
  out.push_back('\t');
  out += std::to_string(t.phoneme_lemma_pairs);
  out.push_back('\t');
  out += std::to_string(t.concepts);
  out.push_back('\t');
  out += std::to_string(t.concepts_with_affect);
  out.push_back('\t');
  out += std::to_string(t.concepts_with_concreteness);
  out.push_back('\n');
  return out;
}

// ---------------------------------------------------------------------------
// Correlation reports (TSV + JSON) with a diagnostics section
// ---------------------------------------------------------------------------

inline std::string serialize_report_tsv(const AnalysisResult& result, bool with_inventory) {
  std::string out = "#family\tvariable_x\tvariable_y\tn\tr\tp\tdivisor\tsignificant\treported";
  if (with_inventory) out += "\tn_phonemes";
  out.push_back('\n');
  for (const auto& rep : result.reports) {
    out += rep.group;
    out.push_back('\t');
    out += rep.variable_x;
    out.push_back('\t');
    out += rep.variable_y;
    out.push_back('\t');
    out += std::to_string(rep.result.n);
    out.push_back('\t');
    out += format_fixed(rep.result.r, 6);
    out.push_back('\t');
    out += format_sci6(rep.result.p);
    out.push_back('\t');
    out += std::to_string(rep.divisor);
    out.push_back('\t');
    out += rep.significant ? "true" : "false";
    out.push_back('\t');
    out += rep.reported ? "true" : "false";
    if (with_inventory) {
      out.push_back('\t');
      out += std::to_string(rep.n_phonemes);
    }
    out.push_back('\n');
  }
  return out;
}

inline nlohmann::ordered_json report_json(const AnalysisResult& result, const std::string& analysis,
                                          const nlohmann::ordered_json& options, double alpha,
                                          double threshold) {
  nlohmann::ordered_json j;
  j["analysis"] = analysis;
  j["options"] = options;
  j["alpha"] = alpha;
  j["report_threshold"] = threshold;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& rep : result.reports) {
    nlohmann::ordered_json row;
    row["family"] = rep.group;
    row["variable_x"] = rep.variable_x;
    row["variable_y"] = rep.variable_y;
    row["n"] = rep.result.n;
    row["dof"] = rep.result.dof;
    row["r"] = rep.result.r;
    row["p"] = rep.result.p;
    row["divisor"] = rep.divisor;
    row["significant"] = rep.significant;
    row["reported"] = rep.reported;
    if (rep.n_phonemes > 0) row["n_phonemes"] = rep.n_phonemes;
    j["reports"].push_back(std::move(row));
  }
  j["skipped"] = nlohmann::ordered_json::array();
  for (const auto& cell : result.skipped) {
    nlohmann::ordered_json row;
    row["family"] = cell.group;
    row["variable_x"] = cell.variable_x;
    row["variable_y"] = cell.variable_y;
    row["reason"] = cell.reason;
    row["n"] = cell.n;
    j["skipped"].push_back(std::move(row));
  }
  return j;
}

inline nlohmann::ordered_json matrix_json(const DistanceMatrix& matrix) {
  nlohmann::ordered_json j;
  j["dims"] = nlohmann::ordered_json::array();
  for (RatingDim dim : kRatingDims) j["dims"].push_back(distance_name(dim));
  j["r"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j2 = 0; j2 < 4; ++j2) {
      if (matrix.cells[i][j2]) {
        row.push_back(matrix.cells[i][j2]->r);
      } else {
        row.push_back(nullptr);
      }
    }
    j["r"].push_back(std::move(row));
  }
  return j;
}

}  // namespace colex
