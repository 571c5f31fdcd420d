#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "colex/concepts.hpp"
#include "colex/error.hpp"
#include "colex/features.hpp"
#include "colex/ingest.hpp"
#include "colex/records.hpp"

namespace colex {

/// Ordered IPA segments of one lemma.
struct PhonemeSeq {
  std::vector<std::string> segments;  // non-empty

  const std::string& initial() const { return segments.front(); }
  const std::string& last() const { return segments.back(); }
  std::size_t size() const { return segments.size(); }

  friend bool operator==(const PhonemeSeq&, const PhonemeSeq&) = default;
};

/// Per-feature count of segments carrying value +1.
struct LemmaFeatureProfile {
  std::array<std::uint32_t, kFeatureCount> counts{};

  friend bool operator==(const LemmaFeatureProfile&, const LemmaFeatureProfile&) = default;
};

struct PhonoMetrics {
  double ttr = 0.0;         // distinct segments / total segments, in (0, 1]
  std::size_t seg_len = 0;  // total segments, >= 1
};

/// Exact-key feature lookup. Strict mode rejects unknown segments; lenient
/// mode substitutes an all-zero vector and logs a warning.
inline SegmentFeatures features_of(const std::string& segment, const FeatureTable& table,
                                   Mode mode = Mode::strict, Diagnostics* diag = nullptr) {
  if (const SegmentFeatures* row = table.find(segment)) return *row;
  if (mode == Mode::strict) {
    fail(Errc::unknown_segment, "segment '" + segment + "' not in feature table");
  }
  if (diag) diag->warn("E_UNKNOWN_SEGMENT: segment '" + segment + "' not in feature table; using zero vector");
  return SegmentFeatures{};
}

/// counts[f] = number of segments in the sequence whose value for f is +1.
inline LemmaFeatureProfile lemma_profile(const PhonemeSeq& seq, const FeatureTable& table,
                                         Mode mode = Mode::strict, Diagnostics* diag = nullptr) {
  LemmaFeatureProfile profile;
  for (const auto& segment : seq.segments) {
    SegmentFeatures f = features_of(segment, table, mode, diag);
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      if (f.values[i] > 0) ++profile.counts[i];
    }
  }
  return profile;
}

inline PhonoMetrics metrics_of(const PhonemeSeq& seq) {
  if (seq.segments.empty()) fail(Errc::invalid_argument, "metrics_of: empty phoneme sequence");
  std::set<std::string_view> distinct(seq.segments.begin(), seq.segments.end());
  PhonoMetrics m;
  m.seg_len = seq.segments.size();
  m.ttr = static_cast<double>(distinct.size()) / static_cast<double>(m.seg_len);
  return m;
}

/// Greedy longest-match tiling of an unsegmented IPA string over the
/// feature table's segment inventory. Matching is byte-wise on NFC forms.
inline PhonemeSeq segment_fallback(const std::string& raw, const FeatureTable& table) {
  if (raw.empty()) fail(Errc::invalid_argument, "segment_fallback: empty input");
  std::size_t max_len = 0;
  for (const auto& [segment, f] : table.rows) max_len = std::max(max_len, segment.size());

  PhonemeSeq seq;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    std::size_t take = std::min(max_len, raw.size() - pos);
    std::string candidate;
    for (std::size_t len = take; len >= 1; --len) {
      candidate.assign(raw, pos, len);
      if (table.contains(candidate)) break;
      candidate.clear();
    }
    if (candidate.empty()) {
      fail(Errc::segmentation_error,
           "cannot segment '" + raw + "' at byte offset " + std::to_string(pos));
    }
    pos += candidate.size();
    seq.segments.push_back(std::move(candidate));
  }
  return seq;
}

/// Applies segment_fallback to raw pronunciation rows (inputs that lack
/// pre-segmentation). Lenient mode drops rows that cannot be tiled.
inline std::vector<PronEntry> segment_all(std::span<const RawPron> raws, const FeatureTable& table,
                                          Mode mode = Mode::strict, Diagnostics* diag = nullptr) {
  std::vector<PronEntry> out;
  out.reserve(raws.size());
  for (const auto& raw : raws) {
    try {
      PhonemeSeq seq = segment_fallback(raw.ipa, table);
      out.push_back(PronEntry{raw.language, raw.word, std::move(seq.segments)});
    } catch (const Error& e) {
      if (mode == Mode::strict) throw;
      if (diag) diag->warn(std::string(errc_code(e.code())) + ": " + e.what());
    }
  }
  return out;
}

/// Pronunciations joined onto (language, lemma) keys.
struct PhonologyJoin {
  std::map<std::pair<std::string, std::string>, PhonemeSeq> by_key;  // (language, join key)

  const PhonemeSeq* find(const std::string& language, const std::string& lemma_key) const {
    auto it = by_key.find({language, lemma_key});
    return it == by_key.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return by_key.size(); }
};

struct JoinedEntry {
  const LexEntry* entry = nullptr;
  const PhonemeSeq* phonemes = nullptr;  // null when no pronunciation matched
};

/// Inner join of lemmas and pronunciations on (language, normalized word).
/// Both sides are already NFC; the TextNorm flag optionally folds
/// underscores into spaces at the join key. When a word carries several
/// pronunciations the first by file order wins and the conflict is logged.
inline PhonologyJoin attach_phonemes(std::span<const LexEntry> entries,
                                     std::span<const PronEntry> prons, const TextNorm& norm = {},
                                     Diagnostics* diag = nullptr) {
  std::set<std::pair<std::string, std::string>> wanted;
  for (const auto& e : entries) wanted.insert({e.language, norm.join_key(e.lemma)});

  PhonologyJoin join;
  for (const auto& p : prons) {
    std::pair<std::string, std::string> key{p.language, norm.join_key(p.word)};
    if (!wanted.count(key)) continue;
    auto [it, inserted] = join.by_key.try_emplace(key, PhonemeSeq{p.segments});
    if (!inserted && diag) {
      if (it->second.segments != p.segments) {
        diag->warn("pronunciation conflict for '" + p.word + "' (" + p.language +
                   "): keeping first of multiple variants");
      }
    }
  }
  return join;
}

/// Materialized per-entry view of the join, entries without pronunciation
/// included with phonemes absent.
inline std::vector<JoinedEntry> join_entries(std::span<const LexEntry> entries,
                                             const PhonologyJoin& join, const TextNorm& norm = {}) {
  std::vector<JoinedEntry> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    out.push_back(JoinedEntry{&e, join.find(e.language, norm.join_key(e.lemma))});
  }
  return out;
}

}  // namespace colex
