#pragma once

#include <cstddef>
#include <vector>

#include "tustin/signals.hpp"
#include "tustin/transfer_function.hpp"

namespace tustin {

/// How the history vectors are primed before the first tick.
enum class StartupMode {
  /// Fill input and output histories with the first input sample.
  kFillWithFirstInput,
  /// Leave histories at zero.
  kZero,
};

/// Running difference equation
///   y_0 = b_hat . [y_1 .. y_n] + a_hat . [x_0 .. x_n]
///
/// Histories are ring buffers indexed most-recent-first. tick() is O(n) and
/// never allocates. Subnormal inputs are flushed to zero.
///
/// Single owner: not safe for concurrent tick() calls.
class FilterState {
 public:
  explicit FilterState(DigitalFilterCoefficients coeffs,
                       StartupMode mode = StartupMode::kFillWithFirstInput);

  /// Throws kInvalidArgument for non-finite x0 without touching the state.
  double tick(double x0);

  /// Back to the post-construction state.
  void reset();

  bool first_tick() const noexcept { return first_tick_; }
  StartupMode startup_mode() const noexcept { return mode_; }
  const DigitalFilterCoefficients& coefficients() const noexcept { return coeffs_; }

  /// [x_0 .. x_n], most recent first.
  std::vector<double> input_history() const;
  /// [y_1 .. y_n], most recent first.
  std::vector<double> output_history() const;

 private:
  DigitalFilterCoefficients coeffs_;
  StartupMode mode_;
  std::vector<double> x_;
  std::vector<double> y_;
  std::size_t x_head_ = 0;
  std::size_t y_head_ = 0;
  bool first_tick_ = true;
};

inline FilterState make_filter(DigitalFilterCoefficients coeffs,
                               StartupMode mode = StartupMode::kFillWithFirstInput) {
  return FilterState(std::move(coeffs), mode);
}

/// Tolerance on input.sample_rate() vs coeffs.loop_rate_hz().
inline constexpr double kRateMatchTolerance = 1e-9;

/// Runs a fresh filter over every sample. Throws kRateMismatch when the input
/// rate differs from the design rate.
TimeSeries process(const DigitalFilterCoefficients& coeffs, const TimeSeries& input,
                   StartupMode mode = StartupMode::kFillWithFirstInput);

}  // namespace tustin
