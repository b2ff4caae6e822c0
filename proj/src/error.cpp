#include "bfi/error.hpp"

namespace bfi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::newton_divergence: return "NewtonDivergence";
    case ErrorCode::rank_deficient: return "RankDeficient";
    case ErrorCode::grid_mismatch: return "GridMismatch";
    case ErrorCode::dim_mismatch: return "DimMismatch";
    case ErrorCode::empty_mask: return "EmptyMask";
    case ErrorCode::nonpositive_error: return "NonpositiveError";
    case ErrorCode::zero_denominator: return "ZeroDenominator";
    case ErrorCode::insufficient_levels: return "InsufficientLevels";
    case ErrorCode::unknown_preset: return "UnknownPreset";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace bfi
