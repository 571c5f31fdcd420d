#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "colex/error.hpp"
#include "colex/features.hpp"
#include "colex/format.hpp"
#include "colex/records.hpp"
#include "colex/text.hpp"

namespace colex {

enum class Mode { strict, lenient };

/// Collects non-fatal warnings (lenient-mode skips, join conflicts, ...).
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
  std::size_t count() const { return warnings.size(); }
};

template <typename T>
struct IngestResult {
  std::vector<T> records;
  std::int64_t lines_total = 0;  // physical lines in the file
  std::int64_t rows_parsed = 0;  // data rows parsed (including duplicates)
  std::int64_t duplicates = 0;   // rows dropped by dedup
  std::int64_t skipped = 0;      // rows dropped in lenient mode
};

// ---------------------------------------------------------------------------
// File access
// ---------------------------------------------------------------------------

inline std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(Errc::io_error, "read failure: " + path);
  return std::move(ss).str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open for writing: " + path.string());
  out << content;
  if (!out) fail(Errc::io_error, "write failure: " + path.string());
}

struct DataLine {
  std::int64_t number;  // 1-based physical line number
  std::string text;
};

/// Splits file content into data lines: strips trailing '\r', skips blank
/// lines and lines whose first byte is '#'.
inline std::vector<DataLine> data_lines(const std::string& content, std::int64_t* total_lines) {
  std::vector<DataLine> out;
  std::int64_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    if (pos == content.size()) {
      if (lineno == 0) break;  // empty file
      break;
    }
    std::size_t nl = content.find('\n', pos);
    std::string_view line = (nl == std::string::npos)
                                ? std::string_view(content).substr(pos)
                                : std::string_view(content).substr(pos, nl - pos);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#' && !trim_view(line).empty()) {
      out.push_back(DataLine{lineno, std::string(line)});
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  if (total_lines) *total_lines = lineno;
  return out;
}

inline std::vector<DataLine> read_data_lines(const std::string& path, std::int64_t* total_lines) {
  return data_lines(read_file_bytes(path), total_lines);
}

namespace detail {

/// Strict mode rethrows; lenient mode records the message and skips the row.
inline bool report_row_error(Mode mode, Diagnostics* diag, const Error& e) {
  if (mode == Mode::strict) throw e;
  if (diag) diag->warn(std::string(errc_code(e.code())) + ": " + e.what());
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lexicon TSV: language <TAB> lemma <TAB> synset_id
// ---------------------------------------------------------------------------

inline IngestResult<LexEntry> ingest_lexicon(const std::string& path, Mode mode = Mode::strict,
                                             Diagnostics* diag = nullptr) {
  IngestResult<LexEntry> result;
  auto lines = read_data_lines(path, &result.lines_total);
  std::set<LexEntry> seen;
  for (const auto& line : lines) {
    try {
      auto fields = split_view(line.text, '\t');
      if (fields.size() != 3) {
        fail(Errc::parse_error, path + ": expected 3 tab-separated fields, got " +
                                    std::to_string(fields.size()),
             line.number);
      }
      std::string language = trim(fields[0]);
      std::string lemma = nfc(trim_view(fields[1]));
      if (language.empty()) fail(Errc::parse_error, path + ": empty language code", line.number);
      if (lemma.empty()) fail(Errc::parse_error, path + ": empty lemma", line.number);
      SynsetId synset = parse_synset_id(trim_view(fields[2]), line.number);
      ++result.rows_parsed;
      LexEntry entry{std::move(language), std::move(lemma), std::move(synset)};
      if (seen.insert(entry).second) {
        result.records.push_back(std::move(entry));
      } else {
        ++result.duplicates;
      }
    } catch (const Error& e) {
      detail::report_row_error(mode, diag, e);
      ++result.skipped;
    }
  }
  return result;
}

inline std::string serialize_lexicon(const std::vector<LexEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += e.language;
    out.push_back('\t');
    out += e.lemma;
    out.push_back('\t');
    out += e.synset.to_string();
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pronunciation TSV: word <TAB> space-separated segments
// (3-column variant adds a leading language column)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> parse_segments(std::string_view cell, const std::string& path,
                                               std::int64_t lineno) {
  std::string_view trimmed = trim_view(cell);
  if (trimmed.empty()) {
    fail(Errc::empty_pronunciation, path + ": empty pronunciation", lineno);
  }
  std::vector<std::string> segments;
  for (std::string_view tok : split_view(trimmed, ' ')) {
    if (tok.empty()) {
      fail(Errc::empty_pronunciation, path + ": empty segment (doubled space?)", lineno);
    }
    segments.push_back(nfc(tok));
  }
  return segments;
}

}  // namespace detail

inline IngestResult<PronEntry> ingest_pronunciations(const std::string& path,
                                                     const std::string& language,
                                                     Mode mode = Mode::strict,
                                                     Diagnostics* diag = nullptr) {
  IngestResult<PronEntry> result;
  auto lines = read_data_lines(path, &result.lines_total);
  for (const auto& line : lines) {
    try {
      auto fields = split_view(line.text, '\t');
      if (fields.size() != 2) {
        fail(Errc::parse_error, path + ": expected 2 tab-separated fields, got " +
                                    std::to_string(fields.size()),
             line.number);
      }
      std::string word = nfc(trim_view(fields[0]));
      if (word.empty()) fail(Errc::parse_error, path + ": empty word", line.number);
      auto segments = detail::parse_segments(fields[1], path, line.number);
      ++result.rows_parsed;
      result.records.push_back(PronEntry{language, std::move(word), std::move(segments)});
    } catch (const Error& e) {
      detail::report_row_error(mode, diag, e);
      ++result.skipped;
    }
  }
  return result;
}

inline IngestResult<PronEntry> ingest_pronunciations_multi(const std::string& path,
                                                           Mode mode = Mode::strict,
                                                           Diagnostics* diag = nullptr) {
  IngestResult<PronEntry> result;
  auto lines = read_data_lines(path, &result.lines_total);
  for (const auto& line : lines) {
    try {
      auto fields = split_view(line.text, '\t');
      if (fields.size() != 3) {
        fail(Errc::parse_error, path + ": expected 3 tab-separated fields, got " +
                                    std::to_string(fields.size()),
             line.number);
      }
      std::string language = trim(fields[0]);
      std::string word = nfc(trim_view(fields[1]));
      if (language.empty()) fail(Errc::parse_error, path + ": empty language code", line.number);
      if (word.empty()) fail(Errc::parse_error, path + ": empty word", line.number);
      auto segments = detail::parse_segments(fields[2], path, line.number);
      ++result.rows_parsed;
      result.records.push_back(PronEntry{std::move(language), std::move(word), std::move(segments)});
    } catch (const Error& e) {
      detail::report_row_error(mode, diag, e);
      ++result.skipped;
    }
  }
  return result;
}

/// Unsegmented pronunciation rows, to be tiled by segment_fallback.
struct RawPron {
  std::string language;
  std::string word;
  std::string ipa;  // NFC-normalized, no pre-segmentation
};

inline std::vector<RawPron> ingest_pronunciations_raw(const std::string& path,
                                                      const std::string& language, Mode mode,
                                                      Diagnostics* diag) {
  std::vector<RawPron> out;
  std::int64_t total = 0;
  for (const auto& line : read_data_lines(path, &total)) {
    try {
      auto fields = split_view(line.text, '\t');
      if (fields.size() != 2) {
        fail(Errc::parse_error, path + ": expected 2 tab-separated fields, got " +
                                    std::to_string(fields.size()),
             line.number);
      }
      std::string word = nfc(trim_view(fields[0]));
      std::string ipa = nfc(trim_view(fields[1]));
      if (word.empty()) fail(Errc::parse_error, path + ": empty word", line.number);
      if (ipa.empty()) fail(Errc::empty_pronunciation, path + ": empty pronunciation", line.number);
      out.push_back(RawPron{language, std::move(word), std::move(ipa)});
    } catch (const Error& e) {
      detail::report_row_error(mode, diag, e);
    }
  }
  return out;
}

inline std::string serialize_pronunciations(const std::vector<PronEntry>& entries,
                                            bool with_language_column) {
  std::string out;
  for (const auto& e : entries) {
    if (with_language_column) {
      out += e.language;
      out.push_back('\t');
    }
    out += e.word;
    out.push_back('\t');
    for (std::size_t i = 0; i < e.segments.size(); ++i) {
      if (i) out.push_back(' ');
      out += e.segments[i];
    }
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ratings CSV
//   concreteness: word,conc_mean
//   affect:       word,valence_mean,arousal_mean,dominance_mean
// ---------------------------------------------------------------------------

enum class RatingKind { concreteness, affect };

struct AffectRange {
  double lo = 1.0;
  double hi = 9.0;
};

namespace detail {

inline std::optional<double> parse_rating_cell(std::string_view cell, double lo, double hi,
                                               const char* column, const std::string& path,
                                               std::int64_t lineno) {
  std::string_view v = trim_view(cell);
  if (v.empty()) return std::nullopt;
  auto value = parse_double(v);
  if (!value) {
    fail(Errc::parse_error, path + ": column " + column + ": not a number: '" + std::string(v) + "'",
         lineno);
  }
  if (*value < lo || *value > hi) {
    fail(Errc::range_error,
         path + ": column " + column + ": value " + std::string(v) + " outside [" +
             format_fixed(lo, 1) + ", " + format_fixed(hi, 1) + "]",
         lineno);
  }
  return value;
}

}  // namespace detail

inline IngestResult<RatingRecord> ingest_ratings(const std::string& path, RatingKind kind,
                                                 Mode mode = Mode::strict,
                                                 Diagnostics* diag = nullptr,
                                                 AffectRange affect_range = {}) {
  IngestResult<RatingRecord> result;
  auto lines = read_data_lines(path, &result.lines_total);
  std::set<std::string> seen;
  const std::size_t arity = kind == RatingKind::concreteness ? 2 : 4;
  for (const auto& line : lines) {
    try {
      auto fields = split_view(line.text, ',');
      if (fields.size() != arity) {
        fail(Errc::parse_error, path + ": expected " + std::to_string(arity) +
                                    " comma-separated fields, got " + std::to_string(fields.size()),
             line.number);
      }
      std::string concept_word = ascii_lower(nfc(trim_view(fields[0])));
      if (concept_word.empty()) fail(Errc::parse_error, path + ": empty concept", line.number);

      RatingRecord rec;
      rec.concept_word = concept_word;
      if (kind == RatingKind::concreteness) {
        rec.concreteness =
            detail::parse_rating_cell(fields[1], 1.0, 5.0, "conc_mean", path, line.number);
      } else {
        rec.valence = detail::parse_rating_cell(fields[1], affect_range.lo, affect_range.hi,
                                                "valence_mean", path, line.number);
        rec.arousal = detail::parse_rating_cell(fields[2], affect_range.lo, affect_range.hi,
                                                "arousal_mean", path, line.number);
        rec.dominance = detail::parse_rating_cell(fields[3], affect_range.lo, affect_range.hi,
                                                  "dominance_mean", path, line.number);
      }
      if (!rec.concreteness && !rec.valence && !rec.arousal && !rec.dominance) {
        fail(Errc::parse_error, path + ": no rating present for '" + concept_word + "'", line.number);
      }
      if (!seen.insert(concept_word).second) {
        fail(Errc::duplicate_concept, path + ": duplicate concept '" + concept_word + "'", line.number);
      }
      ++result.rows_parsed;
      result.records.push_back(std::move(rec));
    } catch (const Error& e) {
      detail::report_row_error(mode, diag, e);
      ++result.skipped;
    }
  }
  return result;
}

inline std::string serialize_ratings(const std::vector<RatingRecord>& records, RatingKind kind) {
  auto shortest = [](double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
  };
  std::string out;
  for (const auto& r : records) {
    out += r.concept_word;
    if (kind == RatingKind::concreteness) {
      out.push_back(',');
      if (r.concreteness) out += shortest(*r.concreteness);
    } else {
      for (const auto& v : {r.valence, r.arousal, r.dominance}) {
        out.push_back(',');
        if (v) out += shortest(*v);
      }
    }
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Feature table CSV: header "segment,<24 feature names>", cells +, -, 0
// ---------------------------------------------------------------------------

inline FeatureTable ingest_feature_table(const std::string& path, Mode mode = Mode::strict,
                                         Diagnostics* diag = nullptr) {
  std::int64_t total = 0;
  auto lines = read_data_lines(path, &total);
  if (lines.empty()) fail(Errc::parse_error, path + ": missing header row");

  // Header: one key column plus the 24 canonical feature names, in order.
  {
    auto fields = split_view(lines[0].text, ',');
    if (fields.size() != kFeatureCount + 1) {
      fail(Errc::wrong_column_count,
           path + ": header has " + std::to_string(fields.size() ? fields.size() - 1 : 0) +
               " feature columns, expected " + std::to_string(kFeatureCount),
           lines[0].number);
    }
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      if (trim_view(fields[i + 1]) != feature_names()[i]) {
        fail(Errc::parse_error, path + ": header feature #" + std::to_string(i + 1) + " is '" +
                                    std::string(trim_view(fields[i + 1])) + "', expected '" +
                                    std::string(feature_names()[i]) + "'",
             lines[0].number);
      }
    }
  }

  FeatureTable table;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    try {
      auto fields = split_view(line.text, ',');
      if (fields.size() != kFeatureCount + 1) {
        fail(Errc::wrong_column_count,
             path + ": row has " + std::to_string(fields.size() ? fields.size() - 1 : 0) +
                 " feature columns, expected " + std::to_string(kFeatureCount),
             line.number);
      }
      std::string segment = nfc(trim_view(fields[0]));
      if (segment.empty()) fail(Errc::parse_error, path + ": empty segment key", line.number);
      if (table.rows.count(segment)) {
        fail(Errc::parse_error, path + ": duplicate segment '" + segment + "'", line.number);
      }
      SegmentFeatures features;
      for (std::size_t i = 0; i < kFeatureCount; ++i) {
        std::string_view cell = trim_view(fields[i + 1]);
        if (cell == "+") {
          features.values[i] = 1;
        } else if (cell == "-") {
          features.values[i] = -1;
        } else if (cell == "0") {
          features.values[i] = 0;
        } else {
          fail(Errc::invalid_feature_value,
               path + ": segment '" + segment + "', feature '" +
                   std::string(feature_names()[i]) + "': invalid value '" + std::string(cell) + "'",
               line.number);
        }
      }
      table.rows.emplace(std::move(segment), features);
    } catch (const Error& e) {
      detail::report_row_error(mode, diag, e);
    }
  }
  return table;
}

inline std::string serialize_feature_table(const FeatureTable& table) {
  std::string out = "segment";
  for (auto name : feature_names()) {
    out.push_back(',');
    out += std::string(name);
  }
  out.push_back('\n');
  for (const auto& [segment, features] : table.rows) {
    out += segment;
    for (std::int8_t v : features.values) {
      out.push_back(',');
      out += (v > 0 ? "+" : v < 0 ? "-" : "0");
    }
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Language metadata CSV: code,family,macroarea (macroarea may be empty)
// ---------------------------------------------------------------------------

inline IngestResult<LanguageInfo> ingest_language_metadata(const std::string& path,
                                                           Mode mode = Mode::strict,
                                                           Diagnostics* diag = nullptr) {
  IngestResult<LanguageInfo> result;
  auto lines = read_data_lines(path, &result.lines_total);
  std::set<std::string> seen;
  for (const auto& line : lines) {
    try {
      auto fields = split_view(line.text, ',');
      if (fields.size() != 3) {
        fail(Errc::parse_error, path + ": expected 3 comma-separated fields, got " +
                                    std::to_string(fields.size()),
             line.number);
      }
      std::string code = trim(fields[0]);
      std::string family = trim(fields[1]);
      std::string macroarea = trim(fields[2]);
      if (code.empty()) fail(Errc::parse_error, path + ": empty language code", line.number);
      if (family.empty()) fail(Errc::parse_error, path + ": empty family", line.number);
      if (!seen.insert(code).second) {
        fail(Errc::duplicate_language_code, path + ": duplicate language code '" + code + "'",
             line.number);
      }
      ++result.rows_parsed;
      LanguageInfo info{std::move(code), std::move(family), std::nullopt};
      if (!macroarea.empty()) info.macroarea = std::move(macroarea);
      result.records.push_back(std::move(info));
    } catch (const Error& e) {
      detail::report_row_error(mode, diag, e);
      ++result.skipped;
    }
  }
  return result;
}

inline std::string serialize_language_metadata(const std::vector<LanguageInfo>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.code;
    out.push_back(',');
    out += r.family;
    out.push_back(',');
    if (r.macroarea) out += *r.macroarea;
    out.push_back('\n');
  }
  return out;
}

/// code -> family lookup built from metadata records.
struct FamilyMap {
  std::map<std::string, std::string> by_code;

  static FamilyMap from(const std::vector<LanguageInfo>& records) {
    FamilyMap fm;
    for (const auto& r : records) fm.by_code.emplace(r.code, r.family);
    return fm;
  }

  /// Unknown codes group under "Unknown" (reported upstream, not fatal).
  const std::string& family_of(const std::string& code) const {
    static const std::string unknown = "Unknown";
    auto it = by_code.find(code);
    return it == by_code.end() ? unknown : it->second;
  }
};

}  // namespace colex
