// colex -- command-line front end for the colexification toolkit.
//
// Subcommands: build, analyze, subgraph, summary.
// Exit codes: 0 success, 1 data error, 2 usage/config error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "colex/pipeline.hpp"
#include "colex/version.hpp"

namespace {

struct CliOverrides {
  std::optional<std::string> lexicon, pron_dir, pron_file, concreteness, affect, features,
      languages, out_dir;
  std::optional<bool> pron_unsegmented, normalize_underscores;
  std::optional<double> alpha, report_threshold, affect_min, affect_max;
  std::optional<colex::Mode> mode;
};

void apply_overrides(colex::RunConfig& config, const CliOverrides& o) {
  if (o.lexicon) config.lexicon = *o.lexicon;
  if (o.pron_dir) config.pron_dir = *o.pron_dir;
  if (o.pron_file) config.pron_file = *o.pron_file;
  if (o.concreteness) config.concreteness = *o.concreteness;
  if (o.affect) config.affect = *o.affect;
  if (o.features) config.features = *o.features;
  if (o.languages) config.languages = *o.languages;
  if (o.out_dir) config.out_dir = *o.out_dir;
  if (o.pron_unsegmented) config.pron_unsegmented = *o.pron_unsegmented;
  if (o.normalize_underscores) config.norm.underscores_to_space = *o.normalize_underscores;
  if (o.alpha) config.alpha = *o.alpha;
  if (o.report_threshold) config.report_threshold = *o.report_threshold;
  if (o.affect_min) config.affect_range.lo = *o.affect_min;
  if (o.affect_max) config.affect_range.hi = *o.affect_max;
  if (o.mode) config.mode = *o.mode;
}

void print_warnings(const colex::Diagnostics& diag) {
  for (const auto& w : diag.warnings) {
    std::fprintf(stderr, "colex: warning: %s\n", w.c_str());
  }
}

int exit_code_for(const colex::Error& e) {
  return e.code() == colex::Errc::invalid_argument ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-lingual colexification graphs with phoneme features and rating analyses"};
  app.set_version_flag("--version", colex::kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  CliOverrides o;
  bool flag_strict = false;
  bool flag_lenient = false;
  bool flag_norm = false;
  bool flag_unsegmented = false;

  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--lexicon", [&](auto v) { o.lexicon = v[0]; return true; },
                 "lexicon TSV (language, lemma, synset_id)");
  app.add_option("--pron-dir", [&](auto v) { o.pron_dir = v[0]; return true; },
                 "directory of per-language pronunciation TSVs (<code>.tsv)");
  app.add_option("--pron-file", [&](auto v) { o.pron_file = v[0]; return true; },
                 "single pronunciation TSV with a leading language column");
  app.add_flag("--pron-unsegmented", flag_unsegmented,
               "pronunciations lack pre-segmentation; tile them over the feature inventory");
  app.add_option("--concreteness", [&](auto v) { o.concreteness = v[0]; return true; },
                 "concreteness ratings CSV (word,conc_mean)");
  app.add_option("--affect", [&](auto v) { o.affect = v[0]; return true; },
                 "affect ratings CSV (word,valence_mean,arousal_mean,dominance_mean)");
  app.add_option("--features", [&](auto v) { o.features = v[0]; return true; },
                 "articulatory feature table CSV");
  app.add_option("--languages", [&](auto v) { o.languages = v[0]; return true; },
                 "language metadata CSV (code,family,macroarea)");
  app.add_option("--out-dir", [&](auto v) { o.out_dir = v[0]; return true; },
                 "output directory for artifacts and reports");
  app.add_flag("--strict", flag_strict, "fail on the first input error (default)");
  app.add_flag("--lenient", flag_lenient, "collect input errors as warnings and continue");
  app.add_option("--alpha", [&](auto v) { o.alpha = std::stod(v[0]); return true; },
                 "base significance level (default 0.05)");
  app.add_option("--report-threshold",
                 [&](auto v) { o.report_threshold = std::stod(v[0]); return true; },
                 "minimum |r| for a significant cell to be marked reported (default 0.1)");
  app.add_flag("--normalize-underscores", flag_norm,
               "treat underscores as spaces in concepts and join keys");
  app.add_option("--affect-min", [&](auto v) { o.affect_min = std::stod(v[0]); return true; },
                 "lower bound of the affect rating scale (default 1)");
  app.add_option("--affect-max", [&](auto v) { o.affect_max = std::stod(v[0]); return true; },
                 "upper bound of the affect rating scale (default 9)");

  CLI::App* cmd_build = app.add_subcommand("build", "ingest inputs and write dataset artifacts");

  CLI::App* cmd_analyze = app.add_subcommand("analyze", "run one correlation analysis");
  std::string analysis_name;
  std::string position_name = "initial";
  std::string rating_name = "concreteness";
  cmd_analyze
      ->add_option("analysis", analysis_name,
                   "one of: colex-distance, distance-matrix, phoneme-position, features, ttr-len")
      ->required();
  cmd_analyze->add_option("--position", position_name, "phoneme position: initial|last");
  cmd_analyze->add_option("--rating", rating_name,
                          "rating dimension: concreteness|valence|arousal|dominance");

  CLI::App* cmd_subgraph = app.add_subcommand("subgraph", "export a DOT neighborhood subgraph");
  std::string concept_word;
  std::size_t depth = 1;
  cmd_subgraph->add_option("--concept", concept_word, "focus concept word")->required();
  cmd_subgraph->add_option("--depth", depth, "breadth-first neighborhood depth (default 1)");

  CLI::App* cmd_summary = app.add_subcommand("summary", "print the dataset summary table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (flag_strict && flag_lenient) {
    std::fprintf(stderr, "colex: E_USAGE: --strict and --lenient are mutually exclusive\n");
    return 2;
  }
  if (flag_strict) o.mode = colex::Mode::strict;
  if (flag_lenient) o.mode = colex::Mode::lenient;
  if (flag_norm) o.normalize_underscores = true;
  if (flag_unsegmented) o.pron_unsegmented = true;

  colex::RunConfig config;
  colex::Diagnostics diag;
  try {
    if (!config_path.empty()) {
      for (const auto& [key, value] : colex::load_config_file(config_path)) {
        colex::apply_config_entry(config, key, value);
      }
    }
    apply_overrides(config, o);

    if (cmd_build->parsed()) {
      colex::BuildResult result = colex::run_build(config, &diag);
      print_warnings(diag);
      const auto& counts = result.manifest.data["counts"];
      std::printf("build: %s entries, %s concept pairs, %s dataset rows -> %s\n",
                  counts["entries"].dump().c_str(), counts["concept_pairs"].dump().c_str(),
                  counts["dataset_rows"].dump().c_str(), config.out_dir.c_str());
      return 0;
    }

    if (cmd_analyze->parsed()) {
      auto kind = colex::parse_analysis_name(analysis_name);
      if (!kind) {
        std::fprintf(stderr, "colex: E_USAGE: unknown analysis '%s'\n", analysis_name.c_str());
        return 2;
      }
      colex::AnalyzeOptions options;
      if (position_name == "initial") {
        options.position = colex::PhonemePosition::initial;
      } else if (position_name == "last") {
        options.position = colex::PhonemePosition::last;
      } else {
        std::fprintf(stderr, "colex: E_USAGE: unknown position '%s'\n", position_name.c_str());
        return 2;
      }
      if (rating_name == "concreteness") options.rating = colex::RatingDim::concreteness;
      else if (rating_name == "valence") options.rating = colex::RatingDim::valence;
      else if (rating_name == "arousal") options.rating = colex::RatingDim::arousal;
      else if (rating_name == "dominance") options.rating = colex::RatingDim::dominance;
      else {
        std::fprintf(stderr, "colex: E_USAGE: unknown rating '%s'\n", rating_name.c_str());
        return 2;
      }
      colex::AnalyzeResult result = colex::run_analyze(config, *kind, options);
      print_warnings(diag);
      std::printf("analyze %s: %zu cells, %zu skipped -> %s\n", analysis_name.c_str(),
                  result.result.reports.size(), result.result.skipped.size(),
                  result.tsv_path.string().c_str());
      return 0;
    }

    if (cmd_subgraph->parsed()) {
      colex::SubgraphResult result = colex::run_subgraph(config, concept_word, depth);
      print_warnings(diag);
      std::printf("subgraph -> %s\n", result.dot_path.string().c_str());
      return 0;
    }

    if (cmd_summary->parsed()) {
      std::string summary = colex::run_summary(config);
      print_warnings(diag);
      std::fputs(summary.c_str(), stdout);
      return 0;
    }
  } catch (const colex::Error& e) {
    print_warnings(diag);
    std::fprintf(stderr, "colex: %s: %s\n", colex::errc_code(e.code()), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "colex: E_INTERNAL: %s\n", e.what());
    return 1;
  }
  return 2;
}
