#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace colex {

// ---------------------------------------------------------------------------
// Small string utilities (UTF-8 aware where it matters)
// ---------------------------------------------------------------------------

inline std::string_view trim_view(std::string_view s) {
  auto is_space = [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
  };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string trim(std::string_view s) { return std::string(trim_view(s)); }

/// ASCII-only lowercasing; non-ASCII bytes pass through untouched.
inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline std::vector<std::string_view> split_view(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline bool contains_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n\f\v") != std::string_view::npos;
}

// ---------------------------------------------------------------------------
// UTF-8 encode/decode
// ---------------------------------------------------------------------------

/// Decodes UTF-8 into code points. Invalid bytes decode as U+FFFD so that
/// normalization never throws on dirty input; validation happens upstream.
inline std::vector<char32_t> utf8_decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0 && i + 1 < s.size() &&
               (static_cast<unsigned char>(s[i + 1]) & 0xC0) == 0x80) {
      cp = (char32_t(b0 & 0x1F) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3F);
      len = 2;
      if (cp < 0x80) cp = 0xFFFD;
    } else if ((b0 & 0xF0) == 0xE0 && i + 2 < s.size() &&
               (static_cast<unsigned char>(s[i + 1]) & 0xC0) == 0x80 &&
               (static_cast<unsigned char>(s[i + 2]) & 0xC0) == 0x80) {
      cp = (char32_t(b0 & 0x0F) << 12) |
           (char32_t(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
           (static_cast<unsigned char>(s[i + 2]) & 0x3F);
      len = 3;
      if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    } else if ((b0 & 0xF8) == 0xF0 && i + 3 < s.size() &&
               (static_cast<unsigned char>(s[i + 1]) & 0xC0) == 0x80 &&
               (static_cast<unsigned char>(s[i + 2]) & 0xC0) == 0x80 &&
               (static_cast<unsigned char>(s[i + 3]) & 0xC0) == 0x80) {
      cp = (char32_t(b0 & 0x07) << 18) |
           (char32_t(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12) |
           (char32_t(static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6) |
           (static_cast<unsigned char>(s[i + 3]) & 0x3F);
      len = 4;
      if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void utf8_append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) utf8_append(out, cp);
  return out;
}

// ---------------------------------------------------------------------------
// NFC canonical composition (subset)
//
// Covers the combining marks U+0300..U+0345 and the precomposed Latin forms
// they produce. Sequences outside the table pass through unchanged, so text
// that is already composed is always preserved byte-for-byte.
// ---------------------------------------------------------------------------

namespace detail {

inline int combining_class(char32_t cp) {
  if (cp < 0x0300 || cp > 0x0345) return 0;
  if (cp <= 0x0314) return 230;
  if (cp == 0x0315) return 232;
  if (cp <= 0x0319) return 220;
  if (cp == 0x031A) return 232;
  if (cp == 0x031B) return 216;
  if (cp <= 0x0320) return 220;
  if (cp <= 0x0322) return 202;
  if (cp <= 0x0326) return 220;
  if (cp <= 0x0328) return 202;
  if (cp <= 0x0333) return 220;
  if (cp <= 0x0338) return 1;
  if (cp <= 0x033C) return 220;
  if (cp <= 0x0344) return 230;
  return 240;  // U+0345
}

struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

// Canonical (base, mark) -> precomposed mappings for common European Latin.
inline const std::array<Composition, 241>& composition_table() {
  static const std::array<Composition, 241> table = {{
      // U+0300 combining grave
      {U'A', 0x0300, 0x00C0}, {U'E', 0x0300, 0x00C8}, {U'I', 0x0300, 0x00CC},
      {U'O', 0x0300, 0x00D2}, {U'U', 0x0300, 0x00D9}, {U'N', 0x0300, 0x01F8},
      {U'W', 0x0300, 0x1E80}, {U'Y', 0x0300, 0x1EF2},
      {U'a', 0x0300, 0x00E0}, {U'e', 0x0300, 0x00E8}, {U'i', 0x0300, 0x00EC},
      {U'o', 0x0300, 0x00F2}, {U'u', 0x0300, 0x00F9}, {U'n', 0x0300, 0x01F9},
      {U'w', 0x0300, 0x1E81}, {U'y', 0x0300, 0x1EF3},
      // U+0301 combining acute
      {U'A', 0x0301, 0x00C1}, {U'E', 0x0301, 0x00C9}, {U'I', 0x0301, 0x00CD},
      {U'O', 0x0301, 0x00D3}, {U'U', 0x0301, 0x00DA}, {U'Y', 0x0301, 0x00DD},
      {U'C', 0x0301, 0x0106}, {U'L', 0x0301, 0x0139}, {U'N', 0x0301, 0x0143},
      {U'R', 0x0301, 0x0154}, {U'S', 0x0301, 0x015A}, {U'Z', 0x0301, 0x0179},
      {U'G', 0x0301, 0x01F4}, {U'M', 0x0301, 0x1E3E}, {U'P', 0x0301, 0x1E54},
      {U'W', 0x0301, 0x1E82},
      {U'a', 0x0301, 0x00E1}, {U'e', 0x0301, 0x00E9}, {U'i', 0x0301, 0x00ED},
      {U'o', 0x0301, 0x00F3}, {U'u', 0x0301, 0x00FA}, {U'y', 0x0301, 0x00FD},
      {U'c', 0x0301, 0x0107}, {U'l', 0x0301, 0x013A}, {U'n', 0x0301, 0x0144},
      {U'r', 0x0301, 0x0155}, {U's', 0x0301, 0x015B}, {U'z', 0x0301, 0x017A},
      {U'g', 0x0301, 0x01F5}, {U'm', 0x0301, 0x1E3F}, {U'p', 0x0301, 0x1E55},
      {U'w', 0x0301, 0x1E83},
      // U+0302 combining circumflex
      {U'A', 0x0302, 0x00C2}, {U'E', 0x0302, 0x00CA}, {U'I', 0x0302, 0x00CE},
      {U'O', 0x0302, 0x00D4}, {U'U', 0x0302, 0x00DB}, {U'C', 0x0302, 0x0108},
      {U'G', 0x0302, 0x011C}, {U'H', 0x0302, 0x0124}, {U'J', 0x0302, 0x0134},
      {U'S', 0x0302, 0x015C}, {U'W', 0x0302, 0x0174}, {U'Y', 0x0302, 0x0176},
      {U'Z', 0x0302, 0x1E90},
      {U'a', 0x0302, 0x00E2}, {U'e', 0x0302, 0x00EA}, {U'i', 0x0302, 0x00EE},
      {U'o', 0x0302, 0x00F4}, {U'u', 0x0302, 0x00FB}, {U'c', 0x0302, 0x0109},
      {U'g', 0x0302, 0x011D}, {U'h', 0x0302, 0x0125}, {U'j', 0x0302, 0x0135},
      {U's', 0x0302, 0x015D}, {U'w', 0x0302, 0x0175}, {U'y', 0x0302, 0x0177},
      {U'z', 0x0302, 0x1E91},
      // U+0303 combining tilde
      {U'A', 0x0303, 0x00C3}, {U'N', 0x0303, 0x00D1}, {U'O', 0x0303, 0x00D5},
      {U'I', 0x0303, 0x0128}, {U'U', 0x0303, 0x0168}, {U'V', 0x0303, 0x1E7C},
      {U'E', 0x0303, 0x1EBC}, {U'Y', 0x0303, 0x1EF8},
      {U'a', 0x0303, 0x00E3}, {U'n', 0x0303, 0x00F1}, {U'o', 0x0303, 0x00F5},
      {U'i', 0x0303, 0x0129}, {U'u', 0x0303, 0x0169}, {U'v', 0x0303, 0x1E7D},
      {U'e', 0x0303, 0x1EBD}, {U'y', 0x0303, 0x1EF9},
      // U+0304 combining macron
      {U'A', 0x0304, 0x0100}, {U'E', 0x0304, 0x0112}, {U'I', 0x0304, 0x012A},
      {U'O', 0x0304, 0x014C}, {U'U', 0x0304, 0x016A}, {U'Y', 0x0304, 0x0232},
      {U'G', 0x0304, 0x1E20}, {0x00C6, 0x0304, 0x01E2},
      {U'a', 0x0304, 0x0101}, {U'e', 0x0304, 0x0113}, {U'i', 0x0304, 0x012B},
      {U'o', 0x0304, 0x014D}, {U'u', 0x0304, 0x016B}, {U'y', 0x0304, 0x0233},
      {U'g', 0x0304, 0x1E21}, {0x00E6, 0x0304, 0x01E3},
      // U+0306 combining breve
      {U'A', 0x0306, 0x0102}, {U'E', 0x0306, 0x0114}, {U'G', 0x0306, 0x011E},
      {U'I', 0x0306, 0x012C}, {U'O', 0x0306, 0x014E}, {U'U', 0x0306, 0x016C},
      {U'a', 0x0306, 0x0103}, {U'e', 0x0306, 0x0115}, {U'g', 0x0306, 0x011F},
      {U'i', 0x0306, 0x012D}, {U'o', 0x0306, 0x014F}, {U'u', 0x0306, 0x016D},
      // U+0307 combining dot above
      {U'C', 0x0307, 0x010A}, {U'E', 0x0307, 0x0116}, {U'G', 0x0307, 0x0120},
      {U'I', 0x0307, 0x0130}, {U'Z', 0x0307, 0x017B}, {U'B', 0x0307, 0x1E02},
      {U'D', 0x0307, 0x1E0A}, {U'F', 0x0307, 0x1E1E}, {U'M', 0x0307, 0x1E40},
      {U'N', 0x0307, 0x1E44}, {U'P', 0x0307, 0x1E56}, {U'R', 0x0307, 0x1E58},
      {U'S', 0x0307, 0x1E60}, {U'T', 0x0307, 0x1E6A}, {U'W', 0x0307, 0x1E86},
      {U'X', 0x0307, 0x1E8A}, {U'Y', 0x0307, 0x1E8E},
      {U'c', 0x0307, 0x010B}, {U'e', 0x0307, 0x0117}, {U'g', 0x0307, 0x0121},
      {U'z', 0x0307, 0x017C}, {U'b', 0x0307, 0x1E03}, {U'd', 0x0307, 0x1E0B},
      {U'f', 0x0307, 0x1E1F}, {U'm', 0x0307, 0x1E41}, {U'n', 0x0307, 0x1E45},
      {U'p', 0x0307, 0x1E57}, {U'r', 0x0307, 0x1E59}, {U's', 0x0307, 0x1E61},
      {U't', 0x0307, 0x1E6B}, {U'w', 0x0307, 0x1E87}, {U'x', 0x0307, 0x1E8B},
      {U'y', 0x0307, 0x1E8F},
      // U+0308 combining diaeresis
      {U'A', 0x0308, 0x00C4}, {U'E', 0x0308, 0x00CB}, {U'I', 0x0308, 0x00CF},
      {U'O', 0x0308, 0x00D6}, {U'U', 0x0308, 0x00DC}, {U'Y', 0x0308, 0x0178},
      {U'H', 0x0308, 0x1E26}, {U'W', 0x0308, 0x1E84}, {U'X', 0x0308, 0x1E8C},
      {U'a', 0x0308, 0x00E4}, {U'e', 0x0308, 0x00EB}, {U'i', 0x0308, 0x00EF},
      {U'o', 0x0308, 0x00F6}, {U'u', 0x0308, 0x00FC}, {U'y', 0x0308, 0x00FF},
      {U'h', 0x0308, 0x1E27}, {U'w', 0x0308, 0x1E85}, {U'x', 0x0308, 0x1E8D},
      {U't', 0x0308, 0x1E97},
      // U+030A combining ring above
      {U'A', 0x030A, 0x00C5}, {U'U', 0x030A, 0x016E},
      {U'a', 0x030A, 0x00E5}, {U'u', 0x030A, 0x016F},
      {U'w', 0x030A, 0x1E98}, {U'y', 0x030A, 0x1E99},
      // U+030C combining caron
      {U'C', 0x030C, 0x010C}, {U'D', 0x030C, 0x010E}, {U'E', 0x030C, 0x011A},
      {U'L', 0x030C, 0x013D}, {U'N', 0x030C, 0x0147}, {U'R', 0x030C, 0x0158},
      {U'S', 0x030C, 0x0160}, {U'T', 0x030C, 0x0164}, {U'Z', 0x030C, 0x017D},
      {U'A', 0x030C, 0x01CD}, {U'I', 0x030C, 0x01CF}, {U'O', 0x030C, 0x01D1},
      {U'U', 0x030C, 0x01D3}, {U'G', 0x030C, 0x01E6}, {U'K', 0x030C, 0x01E8},
      {U'H', 0x030C, 0x021E},
      {U'c', 0x030C, 0x010D}, {U'd', 0x030C, 0x010F}, {U'e', 0x030C, 0x011B},
      {U'l', 0x030C, 0x013E}, {U'n', 0x030C, 0x0148}, {U'r', 0x030C, 0x0159},
      {U's', 0x030C, 0x0161}, {U't', 0x030C, 0x0165}, {U'z', 0x030C, 0x017E},
      {U'a', 0x030C, 0x01CE}, {U'i', 0x030C, 0x01D0}, {U'o', 0x030C, 0x01D2},
      {U'u', 0x030C, 0x01D4}, {U'g', 0x030C, 0x01E7}, {U'k', 0x030C, 0x01E9},
      {U'j', 0x030C, 0x01F0}, {U'h', 0x030C, 0x021F},
      // U+0327 combining cedilla
      {U'C', 0x0327, 0x00C7}, {U'G', 0x0327, 0x0122}, {U'K', 0x0327, 0x0136},
      {U'L', 0x0327, 0x013B}, {U'N', 0x0327, 0x0145}, {U'R', 0x0327, 0x0156},
      {U'S', 0x0327, 0x015E}, {U'T', 0x0327, 0x0162}, {U'D', 0x0327, 0x1E10},
      {U'H', 0x0327, 0x1E28}, {U'E', 0x0327, 0x0228},
      {U'c', 0x0327, 0x00E7}, {U'g', 0x0327, 0x0123}, {U'k', 0x0327, 0x0137},
      {U'l', 0x0327, 0x013C}, {U'n', 0x0327, 0x0146}, {U'r', 0x0327, 0x0157},
      {U's', 0x0327, 0x015F}, {U't', 0x0327, 0x0163}, {U'd', 0x0327, 0x1E11},
      {U'h', 0x0327, 0x1E29}, {U'e', 0x0327, 0x0229},
      // U+0328 combining ogonek
      {U'A', 0x0328, 0x0104}, {U'E', 0x0328, 0x0118}, {U'I', 0x0328, 0x012E},
      {U'O', 0x0328, 0x01EA}, {U'U', 0x0328, 0x0172},
      {U'a', 0x0328, 0x0105}, {U'e', 0x0328, 0x0119}, {U'i', 0x0328, 0x012F},
      {U'o', 0x0328, 0x01EB}, {U'u', 0x0328, 0x0173},
  }};
  return table;
}

inline char32_t compose_pair(char32_t base, char32_t mark) {
  for (const auto& c : composition_table()) {
    if (c.base == base && c.mark == mark) return c.composed;
  }
  return 0;
}

}  // namespace detail

/// Canonically composes a UTF-8 string (NFC over the supported mark set).
/// Already-composed input always passes through unchanged.
inline std::string nfc(std::string_view s) {
  // Fast path: pure ASCII needs no work.
  bool ascii = true;
  for (char c : s) {
    if (static_cast<unsigned char>(c) >= 0x80) {
      ascii = false;
      break;
    }
  }
  if (ascii) return std::string(s);

  std::vector<char32_t> cps = utf8_decode(s);

  // Canonical ordering: stable-sort runs of combining marks by class.
  std::size_t i = 0;
  while (i < cps.size()) {
    if (detail::combining_class(cps[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && detail::combining_class(cps[j]) != 0) ++j;
    std::stable_sort(cps.begin() + i, cps.begin() + j, [](char32_t a, char32_t b) {
      return detail::combining_class(a) < detail::combining_class(b);
    });
    i = j;
  }

  // Composition pass.
  std::vector<char32_t> out;
  out.reserve(cps.size());
  std::size_t starter = SIZE_MAX;  // index into `out` of the last starter
  int last_cc = 0;
  for (char32_t cp : cps) {
    int cc = detail::combining_class(cp);
    if (cc == 0) {
      out.push_back(cp);
      starter = out.size() - 1;
      last_cc = 0;
      continue;
    }
    if (starter != SIZE_MAX && (last_cc == 0 || last_cc < cc)) {
      if (char32_t composed = detail::compose_pair(out[starter], cp)) {
        out[starter] = composed;
        continue;  // mark consumed; last_cc unchanged
      }
    }
    out.push_back(cp);
    last_cc = cc;
  }
  return utf8_encode(out);
}

// ---------------------------------------------------------------------------
// FNV-1a 64-bit (content digests in the run manifest)
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace colex
