#include "tustin/transfer_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tustin/error.hpp"

namespace tustin {
namespace {

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

ContinuousTransferFunction::ContinuousTransferFunction(Polynomial numerator,
                                                       Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  const std::size_t m = numerator_.declared_order();
  const std::size_t n = denominator_.declared_order();
  if (m > n) {
    throw Error(ErrorCode::kNonCausal, "transfer function is not causal: numerator order " +
                                           std::to_string(m) + " exceeds denominator order " +
                                           std::to_string(n));
  }
  if (!all_finite(numerator_.coeffs()) || !all_finite(denominator_.coeffs())) {
    throw Error(ErrorCode::kInvalidArgument, "transfer function coefficients must be finite");
  }
  if (denominator_[n] == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "leading denominator coefficient is zero");
  }
}

ContinuousTransferFunction ContinuousTransferFunction::from_descending(
    std::span<const double> numerator, std::span<const double> denominator) {
  if (numerator.empty() || denominator.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient lists must not be empty");
  }
  return {Polynomial::from_descending(numerator), Polynomial::from_descending(denominator)};
}

DigitalFilterCoefficients::DigitalFilterCoefficients(std::vector<double> a_hat,
                                                     std::vector<double> b_hat,
                                                     double loop_rate_hz)
    : a_hat_(std::move(a_hat)), b_hat_(std::move(b_hat)), loop_rate_hz_(loop_rate_hz) {
  if (a_hat_.size() != b_hat_.size() + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "a_hat must have order+1 entries and b_hat order entries (got " +
                    std::to_string(a_hat_.size()) + " and " + std::to_string(b_hat_.size()) + ")");
  }
  if (!all_finite(a_hat_) || !all_finite(b_hat_)) {
    throw Error(ErrorCode::kInvalidArgument, "filter coefficients must be finite");
  }
  if (!(loop_rate_hz_ > 0.0) || !std::isfinite(loop_rate_hz_)) {
    throw Error(ErrorCode::kNonPositiveRate, "loop rate must be positive and finite");
  }
}

}  // namespace tustin
