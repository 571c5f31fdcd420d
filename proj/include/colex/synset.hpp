#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "colex/error.hpp"

namespace colex {

/// WordNet-style synset identifier, textual form "word#pos#sense".
/// The sense word is stored verbatim so the identifier round-trips
/// byte-exactly; lowercasing happens only at concept derivation.
struct SynsetId {
  std::string sense_word;
  char pos = 'n';           // one of n, v, a, r, s
  std::uint32_t sense = 1;  // >= 1

  std::string to_string() const {
    std::string out = sense_word;
    out.push_back('#');
    out.push_back(pos);
    out.push_back('#');
    out += std::to_string(sense);
    return out;
  }

  friend auto operator<=>(const SynsetId& a, const SynsetId& b) = default;
};

inline bool is_pos_tag(char c) {
  return c == 'n' || c == 'v' || c == 'a' || c == 'r' || c == 's';
}

/// Parses "word#pos#k". Requires exactly two '#' separators, a known POS
/// tag, and a sense number matching [1-9][0-9]* (so formatting the result
/// reproduces the input byte-exactly).
inline SynsetId parse_synset_id(std::string_view text, std::int64_t line = 0) {
  std::size_t first = text.find('#');
  if (first == std::string_view::npos) {
    fail(Errc::malformed_synset_id, "synset id '" + std::string(text) + "': expected two '#' separators", line);
  }
  std::size_t second = text.find('#', first + 1);
  if (second == std::string_view::npos || text.find('#', second + 1) != std::string_view::npos) {
    fail(Errc::malformed_synset_id, "synset id '" + std::string(text) + "': expected exactly two '#' separators", line);
  }
  std::string_view word = text.substr(0, first);
  std::string_view pos = text.substr(first + 1, second - first - 1);
  std::string_view sense = text.substr(second + 1);

  if (word.empty()) {
    fail(Errc::malformed_synset_id, "synset id '" + std::string(text) + "': empty sense word", line);
  }
  if (pos.size() != 1 || !is_pos_tag(pos[0])) {
    fail(Errc::malformed_synset_id, "synset id '" + std::string(text) + "': unknown POS tag '" + std::string(pos) + "'", line);
  }
  if (sense.empty() || sense[0] == '0' || sense.size() > 9 ||
      sense.find_first_not_of("0123456789") != std::string_view::npos) {
    fail(Errc::malformed_synset_id, "synset id '" + std::string(text) + "': sense number must be a positive integer", line);
  }
  std::uint32_t value = 0;
  std::from_chars(sense.data(), sense.data() + sense.size(), value);
  return SynsetId{std::string(word), pos[0], value};
}

}  // namespace colex
