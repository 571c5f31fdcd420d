#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "colex/synset.hpp"

namespace colex {

/// One lexicon row: a lemma of some language pointing at a synset.
struct LexEntry {
  std::string language;
  std::string lemma;  // non-empty, NFC-normalized, trimmed
  SynsetId synset;

  friend auto operator<=>(const LexEntry&, const LexEntry&) = default;
};

/// Language metadata used for the per-family analyses.
struct LanguageInfo {
  std::string code;
  std::string family;
  std::optional<std::string> macroarea;

  friend auto operator<=>(const LanguageInfo&, const LanguageInfo&) = default;
};

/// One pronunciation row: pre-segmented IPA for a word of one language.
struct PronEntry {
  std::string language;
  std::string word;                   // NFC-normalized, trimmed
  std::vector<std::string> segments;  // non-empty; no whitespace inside a segment

  friend auto operator<=>(const PronEntry&, const PronEntry&) = default;
};

/// Psycholinguistic norms for one concept word; each dimension optional.
struct RatingRecord {
  std::string concept_word;  // lowercased
  std::optional<double> concreteness;  // [1, 5]
  std::optional<double> valence;       // affect range (default [1, 9])
  std::optional<double> arousal;
  std::optional<double> dominance;

  friend bool operator==(const RatingRecord&, const RatingRecord&) = default;
};

/// A (lemma, language) pair attesting one colexification.
struct Witness {
  std::string lemma;
  std::string language;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// Concept identity: lowercase sense word plus POS tag. Reports display
/// the word only, but concepts with different POS stay distinct.
struct ConceptKey {
  std::string word;
  char pos = 'n';

  friend auto operator<=>(const ConceptKey&, const ConceptKey&) = default;
};

}  // namespace colex
