#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace colex {

inline constexpr std::size_t kFeatureCount = 24;

/// Canonical order of the 24 articulatory features.
inline const std::array<std::string_view, kFeatureCount>& feature_names() {
  static const std::array<std::string_view, kFeatureCount> names = {
      "syl",   "son",     "cons",  "cont", "delrel", "lat",  "nas",  "strid",
      "voi",   "sg",      "cg",    "ant",  "cor",    "distr", "lab", "hi",
      "lo",    "back",    "round", "velaric", "tense", "long", "hitone", "hireg"};
  return names;
}

/// Ternary feature vector for one IPA segment: +1, -1, or 0 per feature.
struct SegmentFeatures {
  std::array<std::int8_t, kFeatureCount> values{};

  friend bool operator==(const SegmentFeatures&, const SegmentFeatures&) = default;
};

/// Segment -> feature vector lookup table. Keys are exact IPA segment
/// strings; the map is ordered so exports are deterministic.
struct FeatureTable {
  std::map<std::string, SegmentFeatures> rows;

  const SegmentFeatures* find(const std::string& segment) const {
    auto it = rows.find(segment);
    return it == rows.end() ? nullptr : &it->second;
  }

  bool contains(const std::string& segment) const { return rows.count(segment) > 0; }
  std::size_t size() const { return rows.size(); }
};

}  // namespace colex
