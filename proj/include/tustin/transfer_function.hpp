#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tustin/polynomial.hpp"

namespace tustin {

/// H(s) = N(s) / D(s) with deg N = m <= deg D = n and a nonzero leading
/// denominator coefficient.
class ContinuousTransferFunction {
 public:
  /// Throws kNonCausal if m > n, kInvalidArgument on a zero leading
  /// denominator coefficient or non-finite coefficients.
  ContinuousTransferFunction(Polynomial numerator, Polynomial denominator);

  /// Coefficients in descending powers of s, b_0..b_m over a_0..a_n.
  static ContinuousTransferFunction from_descending(std::span<const double> numerator,
                                                    std::span<const double> denominator);

  const Polynomial& numerator() const noexcept { return numerator_; }
  const Polynomial& denominator() const noexcept { return denominator_; }

  std::size_t numerator_order() const noexcept { return numerator_.declared_order(); }
  std::size_t order() const noexcept { return denominator_.declared_order(); }

  friend bool operator==(const ContinuousTransferFunction&,
                         const ContinuousTransferFunction&) = default;

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

/// Difference-equation coefficients for
///   y_0 = b_hat . [y_1 .. y_n] + a_hat . [x_0 .. x_n]
/// valid only at loop_rate_hz.
class DigitalFilterCoefficients {
 public:
  /// a_hat must have exactly one more entry than b_hat.
  DigitalFilterCoefficients(std::vector<double> a_hat, std::vector<double> b_hat,
                            double loop_rate_hz);

  std::span<const double> a_hat() const noexcept { return a_hat_; }
  std::span<const double> b_hat() const noexcept { return b_hat_; }
  double loop_rate_hz() const noexcept { return loop_rate_hz_; }
  std::size_t order() const noexcept { return b_hat_.size(); }

  friend bool operator==(const DigitalFilterCoefficients&,
                         const DigitalFilterCoefficients&) = default;

 private:
  std::vector<double> a_hat_;
  std::vector<double> b_hat_;
  double loop_rate_hz_;
};

}  // namespace tustin
