#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zonoforge {

enum class ErrorCode {
  kParse,
  kDimensionMismatch,
  kZeroColumn,
  kRankDeficient,
  kBadB0,
  kNotIndependent,
  kMissingB0,
  kFamilyNotClosed,
  kColoopInI,
  kZeroVector,
  kNoStabilization,
  kNotSimple,
  kSamplingExhausted,
  kUnknownBasis,
  kDuplicatePoints,
  kConditionFails,
  kBundleMismatch,
  kResourceLimit,
};

std::string_view error_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code; the
// CLI maps codes to exit statuses and remediation hints.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace zonoforge
