#include "tustin/error.hpp"

namespace tustin {

std::string_view error_slug(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kTfSyntax: return "tf-syntax";
    case ErrorCode::kNonCausal: return "non-causal";
    case ErrorCode::kNonPositiveRate: return "non-positive-rate";
    case ErrorCode::kDegenerateLeadingCoefficient: return "degenerate-leading-coefficient";
    case ErrorCode::kRateMismatch: return "rate-mismatch";
    case ErrorCode::kAboveNyquist: return "above-nyquist";
    case ErrorCode::kDenominatorZero: return "denominator-zero";
    case ErrorCode::kSampleCountOverflow: return "sample-count-overflow";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

TfSyntaxError::TfSyntaxError(std::size_t byte_offset, std::string expected, std::string found)
    : Error(ErrorCode::kTfSyntax,
            "at byte " + std::to_string(byte_offset) + ": expected " + expected + ", found " + found),
      byte_offset_(byte_offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace tustin
