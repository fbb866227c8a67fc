#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tustin {

enum class ErrorCode {
  kInvalidArgument,
  kTfSyntax,
  kNonCausal,
  kNonPositiveRate,
  kDegenerateLeadingCoefficient,
  kRateMismatch,
  kAboveNyquist,
  kDenominatorZero,
  kSampleCountOverflow,
  kOutOfRange,
  kIo,
};

// Short machine-readable slug, e.g. "non-causal".
std::string_view error_slug(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class TfSyntaxError : public Error {
 public:
  TfSyntaxError(std::size_t byte_offset, std::string expected, std::string found);

  std::size_t byte_offset() const noexcept { return byte_offset_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t byte_offset_;
  std::string expected_;
  std::string found_;
};

}  // namespace tustin
