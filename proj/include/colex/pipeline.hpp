#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "colex/analyses.hpp"
#include "colex/artifacts.hpp"
#include "colex/dot.hpp"
#include "colex/error.hpp"
#include "colex/version.hpp"

namespace colex {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

struct RunConfig {
  std::string lexicon;
  std::string pron_dir;   // directory of <language>.tsv files
  std::string pron_file;  // 3-column variant (language, word, segments)
  bool pron_unsegmented = false;
  std::string concreteness;
  std::string affect;
  std::string features;
  std::string languages;
  std::string out_dir = "out";
  Mode mode = Mode::strict;
  double alpha = 0.05;
  double report_threshold = 0.1;
  AffectRange affect_range;
  TextNorm norm;
};

/// Flat key=value config file ('#' comments, blank lines skipped).
inline std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::int64_t total = 0;
  for (const auto& line : read_data_lines(path, &total)) {
    std::size_t eq = line.text.find('=');
    if (eq == std::string::npos) {
      fail(Errc::invalid_argument, path + ": expected key=value", line.number);
    }
    std::string key = trim(std::string_view(line.text).substr(0, eq));
    std::string value = trim(std::string_view(line.text).substr(eq + 1));
    if (key.empty()) fail(Errc::invalid_argument, path + ": empty key", line.number);
    kv[key] = value;
  }
  return kv;
}

inline void apply_config_entry(RunConfig& config, const std::string& key,
                               const std::string& value) {
  auto as_bool = [&](const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(Errc::invalid_argument, "config key '" + key + "': expected boolean, got '" + v + "'");
  };
  auto as_double = [&](const std::string& v) {
    auto d = parse_double(v);
    if (!d) fail(Errc::invalid_argument, "config key '" + key + "': expected number, got '" + v + "'");
    return *d;
  };
  if (key == "lexicon") config.lexicon = value;
  else if (key == "pron_dir") config.pron_dir = value;
  else if (key == "pron_file") config.pron_file = value;
  else if (key == "pron_unsegmented") config.pron_unsegmented = as_bool(value);
  else if (key == "concreteness") config.concreteness = value;
  else if (key == "affect") config.affect = value;
  else if (key == "features") config.features = value;
  else if (key == "languages") config.languages = value;
  else if (key == "out_dir") config.out_dir = value;
  else if (key == "mode") {
    if (value == "strict") config.mode = Mode::strict;
    else if (value == "lenient") config.mode = Mode::lenient;
    else fail(Errc::invalid_argument, "config key 'mode': expected strict|lenient, got '" + value + "'");
  } else if (key == "alpha") config.alpha = as_double(value);
  else if (key == "report_threshold") config.report_threshold = as_double(value);
  else if (key == "normalize_underscores") config.norm.underscores_to_space = as_bool(value);
  else if (key == "affect_min") config.affect_range.lo = as_double(value);
  else if (key == "affect_max") config.affect_range.hi = as_double(value);
  else fail(Errc::invalid_argument, "unknown config key '" + key + "'");
}

inline void validate_config(const RunConfig& config, bool for_build) {
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    fail(Errc::invalid_argument, "alpha must be in (0,1)");
  }
  if (config.report_threshold < 0.0) {
    fail(Errc::invalid_argument, "report threshold must be >= 0");
  }
  if (config.affect_range.lo >= config.affect_range.hi) {
    fail(Errc::invalid_argument, "affect rating range is empty");
  }
  auto require = [](const std::string& path, const char* what) {
    if (path.empty()) fail(Errc::invalid_argument, std::string("missing required path: ") + what);
    if (!fs::exists(path)) {
      fail(Errc::invalid_argument, std::string(what) + " path does not exist: " + path);
    }
  };
  if (for_build) {
    require(config.lexicon, "lexicon");
    require(config.features, "features");
    require(config.languages, "languages");
    for (const auto& [path, what] :
         {std::pair{config.pron_dir, "pron_dir"}, {config.pron_file, "pron_file"},
          {config.concreteness, "concreteness"}, {config.affect, "affect"}}) {
      if (!path.empty() && !fs::exists(path)) {
        fail(Errc::invalid_argument, std::string(what) + " path does not exist: " + path);
      }
    }
  }
  if (config.out_dir.empty()) fail(Errc::invalid_argument, "missing out_dir");
}

// ---------------------------------------------------------------------------
// Run manifest
// ---------------------------------------------------------------------------

struct RunManifest {
  nlohmann::ordered_json data;

  std::string serialize() const { return data.dump(2) + "\n"; }
};

namespace detail {

inline nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["lexicon"] = c.lexicon;
  j["pron_dir"] = c.pron_dir;
  j["pron_file"] = c.pron_file;
  j["pron_unsegmented"] = c.pron_unsegmented;
  j["concreteness"] = c.concreteness;
  j["affect"] = c.affect;
  j["features"] = c.features;
  j["languages"] = c.languages;
  j["out_dir"] = c.out_dir;
  j["mode"] = c.mode == Mode::strict ? "strict" : "lenient";
  j["alpha"] = c.alpha;
  j["report_threshold"] = c.report_threshold;
  j["normalize_underscores"] = c.norm.underscores_to_space;
  j["affect_min"] = c.affect_range.lo;
  j["affect_max"] = c.affect_range.hi;
  return j;
}

inline char hex_digit(std::uint64_t v) { return "0123456789abcdef"[v & 0xF]; }

inline std::string hex64(std::uint64_t v) {
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex_digit(v);
    v >>= 4;
  }
  return out;
}

class StageClock {
 public:
  explicit StageClock(nlohmann::ordered_json& stages) : stages_(stages) {}

  void record(const std::string& name, std::size_t records) {
    auto now = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
    last_ = now;
    nlohmann::ordered_json stage;
    stage["name"] = name;
    stage["records"] = records;
    stage["wall_ms"] = ms;
    stages_.push_back(std::move(stage));
  }

 private:
  nlohmann::ordered_json& stages_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

/// Removes everything written so far if the build throws part-way.
class OutputTracker {
 public:
  ~OutputTracker() {
    if (!armed_) return;
    for (const auto& path : written_) {
      std::error_code ec;
      fs::remove(path, ec);
    }
  }

  void write(const fs::path& path, const std::string& content) {
    write_file(path, content);
    written_.push_back(path);
  }

  void commit() { armed_ = false; }

 private:
  std::vector<fs::path> written_;
  bool armed_ = true;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// build: ingest -> graph -> dataset -> artifacts + manifest
// ---------------------------------------------------------------------------

struct BuildResult {
  RunManifest manifest;
  SummaryTable summary;
};

inline BuildResult run_build(const RunConfig& config, Diagnostics* diag = nullptr) {
  validate_config(config, /*for_build=*/true);
  fs::create_directories(config.out_dir);

  RunManifest manifest;
  manifest.data["tool"] = kToolName;
  manifest.data["version"] = kToolVersion;
  manifest.data["config"] = detail::config_json(config);

  // Input digests, ordered by path for a stable manifest.
  std::vector<std::string> input_paths;
  auto add_input = [&](const std::string& p) {
    if (!p.empty() && fs::is_regular_file(p)) input_paths.push_back(p);
  };
  add_input(config.lexicon);
  add_input(config.pron_file);
  add_input(config.concreteness);
  add_input(config.affect);
  add_input(config.features);
  add_input(config.languages);
  if (!config.pron_dir.empty() && fs::is_directory(config.pron_dir)) {
    for (const auto& entry : fs::directory_iterator(config.pron_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".tsv") {
        input_paths.push_back(entry.path().string());
      }
    }
  }
  std::sort(input_paths.begin(), input_paths.end());
  manifest.data["inputs"] = nlohmann::ordered_json::array();
  for (const auto& path : input_paths) {
    std::string bytes = read_file_bytes(path);
    nlohmann::ordered_json j;
    j["path"] = path;
    j["bytes"] = bytes.size();
    j["fnv1a64"] = detail::hex64(fnv1a64(bytes));
    manifest.data["inputs"].push_back(std::move(j));
  }

  manifest.data["stages"] = nlohmann::ordered_json::array();
  detail::StageClock clock(manifest.data["stages"]);

  // --- ingest ---------------------------------------------------------------
  auto lexicon = ingest_lexicon(config.lexicon, config.mode, diag);
  clock.record("ingest_lexicon", lexicon.records.size());

  FeatureTable table = ingest_feature_table(config.features, config.mode, diag);
  clock.record("ingest_feature_table", table.size());

  std::vector<PronEntry> prons;
  if (!config.pron_dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(config.pron_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".tsv") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      std::string language = file.stem().string();
      if (config.pron_unsegmented) {
        auto raws = ingest_pronunciations_raw(file.string(), language, config.mode, diag);
        auto segmented = segment_all(raws, table, config.mode, diag);
        prons.insert(prons.end(), segmented.begin(), segmented.end());
      } else {
        auto result = ingest_pronunciations(file.string(), language, config.mode, diag);
        prons.insert(prons.end(), result.records.begin(), result.records.end());
      }
    }
  }
  if (!config.pron_file.empty()) {
    auto result = ingest_pronunciations_multi(config.pron_file, config.mode, diag);
    prons.insert(prons.end(), result.records.begin(), result.records.end());
  }
  clock.record("ingest_pronunciations", prons.size());

  std::vector<RatingRecord> rating_records;
  if (!config.concreteness.empty()) {
    auto result = ingest_ratings(config.concreteness, RatingKind::concreteness, config.mode, diag,
                                 config.affect_range);
    rating_records.insert(rating_records.end(), result.records.begin(), result.records.end());
  }
  if (!config.affect.empty()) {
    auto result =
        ingest_ratings(config.affect, RatingKind::affect, config.mode, diag, config.affect_range);
    rating_records.insert(rating_records.end(), result.records.begin(), result.records.end());
  }
  clock.record("ingest_ratings", rating_records.size());

  auto languages = ingest_language_metadata(config.languages, config.mode, diag);
  clock.record("ingest_language_metadata", languages.records.size());

  if (diag) {
    std::set<std::string> known;
    for (const auto& info : languages.records) known.insert(info.code);
    std::set<std::string> missing;
    for (const auto& e : lexicon.records) {
      if (!known.count(e.language)) missing.insert(e.language);
    }
    for (const auto& code : missing) {
      diag->warn("language '" + code + "' missing from metadata; grouped as 'Unknown'");
    }
  }

  // --- graph and joins --------------------------------------------------------
  ColexGraph graph = construct_graph(lexicon.records);
  clock.record("construct_graph", graph.edge_count());

  std::vector<ConceptPairRecord> records = derive_concept_graph(graph, config.norm);
  clock.record("derive_concept_graph", records.size());

  PhonologyJoin phonemes = attach_phonemes(lexicon.records, prons, config.norm, diag);
  clock.record("attach_phonemes", phonemes.size());

  auto ratings = attach_ratings(records, rating_records, config.norm);
  auto ratings_by_word = merge_ratings(rating_records, config.norm);
  clock.record("attach_ratings", ratings.size());

  std::vector<ColexRecord> dataset = build_dataset(records, ratings, phonemes, config.norm);
  clock.record("build_dataset", dataset.size());

  std::size_t witness_total = 0;
  for (const auto& rec : records) witness_total += rec.n_colex;
  if (witness_total != dataset.size()) {
    fail(Errc::invalid_argument, "internal: dataset rows (" + std::to_string(dataset.size()) +
                                     ") != concept-graph witness total (" +
                                     std::to_string(witness_total) + ")");
  }

  SummaryTable summary = summary_stats(lexicon.records, graph, records, phonemes, ratings);

  manifest.data["counts"] = nlohmann::ordered_json{
      {"lexicon_lines", lexicon.lines_total},
      {"entries", lexicon.records.size()},
      {"entries_deduplicated", lexicon.duplicates},
      {"rows_skipped", lexicon.skipped},
      {"graph_edges", graph.edge_count()},
      {"graph_nodes", graph.node_count()},
      {"graph_witnesses", graph.witness_total()},
      {"concept_pairs", records.size()},
      {"concept_witnesses", witness_total},
      {"dataset_rows", dataset.size()},
      {"phoneme_lemma_pairs", phonemes.size()},
      {"warnings", diag ? diag->count() : 0},
  };

  // --- artifacts --------------------------------------------------------------
  detail::OutputTracker outputs;
  fs::path out(config.out_dir);
  outputs.write(out / kGraphArtifact, serialize_graph_dump(records));
  outputs.write(out / kDatasetArtifact, serialize_dataset(dataset));
  outputs.write(out / kPhonologyArtifact, serialize_phonology_dump(phonemes, table));
  outputs.write(out / kRatingsArtifact, serialize_ratings_dump(ratings_by_word));
  outputs.write(out / kSummaryArtifact, serialize_summary(summary));
  clock.record("write_artifacts", 5);
  outputs.write(out / kManifestArtifact, manifest.serialize());
  outputs.commit();

  return BuildResult{std::move(manifest), summary};
}

// ---------------------------------------------------------------------------
// analyze: load artifacts, run one analysis, write reports
// ---------------------------------------------------------------------------

enum class AnalysisKind { colex_distance, distance_matrix, phoneme_position, features, ttr_len };

inline const char* analysis_name(AnalysisKind kind) {
  switch (kind) {
    case AnalysisKind::colex_distance: return "colex-distance";
    case AnalysisKind::distance_matrix: return "distance-matrix";
    case AnalysisKind::phoneme_position: return "phoneme-position";
    case AnalysisKind::features: return "features";
    case AnalysisKind::ttr_len: return "ttr-len";
  }
  return "?";
}

inline std::optional<AnalysisKind> parse_analysis_name(const std::string& name) {
  if (name == "colex-distance") return AnalysisKind::colex_distance;
  if (name == "distance-matrix") return AnalysisKind::distance_matrix;
  if (name == "phoneme-position") return AnalysisKind::phoneme_position;
  if (name == "features") return AnalysisKind::features;
  if (name == "ttr-len") return AnalysisKind::ttr_len;
  return std::nullopt;
}

struct AnalyzeOptions {
  PhonemePosition position = PhonemePosition::initial;
  RatingDim rating = RatingDim::concreteness;
};

struct AnalyzeResult {
  fs::path tsv_path;
  fs::path json_path;
  AnalysisResult result;
};

namespace detail {

inline std::string require_artifact(const RunConfig& config, const char* name) {
  fs::path path = fs::path(config.out_dir) / name;
  if (!fs::exists(path)) {
    fail(Errc::missing_artifact,
         "artifact '" + path.string() + "' not found; run 'colex build' first");
  }
  return path.string();
}

}  // namespace detail

inline AnalyzeResult run_analyze(const RunConfig& config, AnalysisKind kind,
                                 const AnalyzeOptions& options = {}) {
  validate_config(config, /*for_build=*/false);

  auto records = read_graph_dump(detail::require_artifact(config, kGraphArtifact));
  auto ratings_by_word = read_ratings_dump(detail::require_artifact(config, kRatingsArtifact));
  auto ratings = attach_ratings_by_word(records, ratings_by_word);

  AnalysisResult analysis;
  nlohmann::ordered_json options_json = nlohmann::ordered_json::object();
  std::string file_stem = analysis_name(kind);
  std::optional<DistanceMatrix> matrix;

  if (kind == AnalysisKind::colex_distance) {
    analysis = analyze_colex_distance(records, ratings, config.alpha, config.report_threshold);
  } else if (kind == AnalysisKind::distance_matrix) {
    matrix = analyze_distance_matrix(records, ratings);
    analysis = distance_matrix_reports(*matrix, config.alpha, config.report_threshold);
  } else {
    if (config.languages.empty() || !fs::exists(config.languages)) {
      fail(Errc::invalid_argument, "languages metadata path required for grouped analyses");
    }
    auto phonemes = read_phonology_dump(detail::require_artifact(config, kPhonologyArtifact));
    auto languages = ingest_language_metadata(config.languages, config.mode, nullptr);
    FamilyMap families = FamilyMap::from(languages.records);
    auto samples = build_lemma_samples(records, phonemes, ratings_by_word, config.norm);

    if (kind == AnalysisKind::phoneme_position) {
      analysis = analyze_phoneme_position(samples, families, options.rating, options.position,
                                          config.alpha, config.report_threshold);
      options_json["position"] = position_name(options.position);
      options_json["rating"] = rating_dim_name(options.rating);
      file_stem += std::string("_") + position_name(options.position) + "_" +
                   rating_dim_name(options.rating);
    } else if (kind == AnalysisKind::features) {
      if (config.features.empty() || !fs::exists(config.features)) {
        fail(Errc::invalid_argument, "features path required for the feature analysis");
      }
      FeatureTable table = ingest_feature_table(config.features, config.mode, nullptr);
      analysis = analyze_features(samples, table, families, config.alpha, config.report_threshold);
    } else {
      analysis = analyze_ttr_len(samples, families, options.rating, config.alpha,
                                 config.report_threshold);
      options_json["rating"] = rating_dim_name(options.rating);
      file_stem += std::string("_") + rating_dim_name(options.rating);
    }
  }

  for (char& c : file_stem) {
    if (c == '-') c = '_';
  }
  fs::path reports_dir = fs::path(config.out_dir) / "reports";
  fs::create_directories(reports_dir);

  AnalyzeResult out;
  out.tsv_path = reports_dir / (file_stem + ".tsv");
  out.json_path = reports_dir / (file_stem + ".json");
  out.result = analysis;

  write_file(out.tsv_path,
             serialize_report_tsv(analysis, kind == AnalysisKind::phoneme_position));
  nlohmann::ordered_json j = report_json(analysis, analysis_name(kind), options_json, config.alpha,
                                         config.report_threshold);
  if (matrix) j["matrix"] = matrix_json(*matrix);
  write_file(out.json_path, j.dump(2) + "\n");
  return out;
}

// ---------------------------------------------------------------------------
// subgraph: DOT neighborhood export
// ---------------------------------------------------------------------------

struct SubgraphResult {
  fs::path dot_path;
  std::string dot;
};

inline SubgraphResult run_subgraph(const RunConfig& config, const std::string& concept_word,
                                   std::size_t depth) {
  if (depth < 1) fail(Errc::invalid_argument, "subgraph depth must be >= 1");
  auto records = read_graph_dump(detail::require_artifact(config, kGraphArtifact));
  std::string focus = config.norm.join_key(ascii_lower(nfc(trim_view(concept_word))));

  SubgraphResult out;
  out.dot = export_dot(records, focus, depth);

  std::string stem = "subgraph_" + focus + "_" + std::to_string(depth);
  for (char& c : stem) {
    if (c == ' ' || c == '/') c = '_';
  }
  fs::path reports_dir = fs::path(config.out_dir) / "reports";
  fs::create_directories(reports_dir);
  out.dot_path = reports_dir / (stem + ".dot");
  write_file(out.dot_path, out.dot);
  return out;
}

/// Reads back the summary artifact for `colex summary`.
inline std::string run_summary(const RunConfig& config) {
  return read_file_bytes(detail::require_artifact(config, kSummaryArtifact));
}

}  // namespace colex
