#pragma once

#include <charconv>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "colex/error.hpp"

namespace colex {

/// Fixed-point rendering with `decimals` places. snprintf converts the
/// exact binary value with round-half-even ties, so output is deterministic.
inline std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  return buf;
}

/// Scientific rendering with 6 significant digits (reports' p-values).
inline std::string format_sci6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.5e", x);
  return buf;
}

inline constexpr const char* kAbsentCell = "-";

inline std::string format_opt(const std::optional<double>& x, int decimals) {
  return x ? format_fixed(*x, decimals) : kAbsentCell;
}

/// Strict double parser (locale-free). Accepts plain decimal/scientific
/// notation; rejects trailing junk.
inline std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

inline std::optional<long long> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace colex
