#include "zonoforge/error.hpp"

namespace zonoforge {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroColumn: return "ZeroColumn";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kBadB0: return "BadB0";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kMissingB0: return "MissingB0";
    case ErrorCode::kFamilyNotClosed: return "FamilyNotClosed";
    case ErrorCode::kColoopInI: return "ColoopInI";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNoStabilization: return "NoStabilization";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kSamplingExhausted: return "SamplingExhausted";
    case ErrorCode::kUnknownBasis: return "UnknownBasis";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
    case ErrorCode::kConditionFails: return "ConditionFails";
    case ErrorCode::kBundleMismatch: return "BundleMismatch";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

}  // namespace zonoforge
