#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bfi {

enum class ErrorCode {
  invalid_argument,
  newton_divergence,
  rank_deficient,
  grid_mismatch,
  dim_mismatch,
  empty_mask,
  nonpositive_error,
  zero_denominator,
  insufficient_levels,
  unknown_preset,
  parse_error,
  validation_error,
  io_error,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bfi
