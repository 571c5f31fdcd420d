#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace colex {

/// Error categories raised by the toolkit. Each maps to a stable
/// machine-parseable code printed by the CLI on failure.
enum class Errc {
  io_error,
  parse_error,
  malformed_synset_id,
  empty_pronunciation,
  range_error,
  duplicate_concept,
  wrong_column_count,
  invalid_feature_value,
  duplicate_language_code,
  unknown_concept,
  unknown_segment,
  segmentation_error,
  oracle_scale_exceeded,
  length_mismatch,
  too_few_samples,
  zero_variance,
  degenerate_indicator,
  missing_artifact,
  invalid_argument,
};

inline const char* errc_code(Errc c) {
  switch (c) {
    case Errc::io_error: return "E_IO";
    case Errc::parse_error: return "E_PARSE";
    case Errc::malformed_synset_id: return "E_SYNSET";
    case Errc::empty_pronunciation: return "E_EMPTY_PRON";
    case Errc::range_error: return "E_RANGE";
    case Errc::duplicate_concept: return "E_DUP_CONCEPT";
    case Errc::wrong_column_count: return "E_COLUMNS";
    case Errc::invalid_feature_value: return "E_FEATURE_VALUE";
    case Errc::duplicate_language_code: return "E_DUP_LANG";
    case Errc::unknown_concept: return "E_UNKNOWN_CONCEPT";
    case Errc::unknown_segment: return "E_UNKNOWN_SEGMENT";
    case Errc::segmentation_error: return "E_SEGMENTATION";
    case Errc::oracle_scale_exceeded: return "E_ORACLE_SCALE";
    case Errc::length_mismatch: return "E_LENGTH";
    case Errc::too_few_samples: return "E_FEW_SAMPLES";
    case Errc::zero_variance: return "E_ZERO_VARIANCE";
    case Errc::degenerate_indicator: return "E_DEGENERATE";
    case Errc::missing_artifact: return "E_MISSING_ARTIFACT";
    case Errc::invalid_argument: return "E_USAGE";
  }
  return "E_UNKNOWN";
}

/// Exception carrying an error category plus optional 1-based source line.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::int64_t line = 0)
      : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ")"
                                    : message),
        code_(code),
        line_(line) {}

  Errc code() const noexcept { return code_; }
  std::int64_t line() const noexcept { return line_; }  // 0 = not applicable

 private:
  Errc code_;
  std::int64_t line_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message,
                              std::int64_t line = 0) {
  throw Error(code, message, line);
}

}  // namespace colex
