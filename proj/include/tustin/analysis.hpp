#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tustin/signals.hpp"
#include "tustin/transfer_function.hpp"

namespace tustin {

struct FrequencyResponsePoint {
  double freq_hz = 0.0;
  /// 20 log10 |H|; -infinity at an exact transmission zero.
  double magnitude_db = 0.0;
  /// Unwrapped along the frequency grid.
  double phase_deg = 0.0;
};

/// N(j omega) / D(j omega). Throws kInvalidArgument for omega <= 0 and
/// kDenominatorZero when |D(j omega)| underflows (pole on the j omega axis).
std::complex<double> analytic_response_continuous(const ContinuousTransferFunction& tf,
                                                  double omega);

/// (sum_k a_k z^-k) / (1 - sum_k b_k z^-(k+1)) at z = exp(j omega dt).
/// Throws kAboveNyquist unless 0 < omega < pi f_l.
std::complex<double> analytic_response_digital(const DigitalFilterCoefficients& coeffs,
                                               double omega);

/// `points` log-spaced frequencies from fmin to fmax inclusive.
std::vector<double> log_grid(double fmin_hz, double fmax_hz, std::size_t points);

/// Adds multiples of 360 so consecutive phases differ by at most 180 degrees.
void unwrap_phase(std::vector<FrequencyResponsePoint>& points);

std::vector<FrequencyResponsePoint> analytic_bode_continuous(const ContinuousTransferFunction& tf,
                                                             std::span<const double> freqs_hz);
std::vector<FrequencyResponsePoint> analytic_bode_digital(const DigitalFilterCoefficients& coeffs,
                                                          std::span<const double> freqs_hz);

/// Grid frequencies must stay below this fraction of the loop rate.
inline constexpr double kSteppedSineMaxFraction = 0.45;

struct SteppedSineOptions {
  int settle_cycles = 20;   // >= 5
  int measure_cycles = 10;  // >= 2
};

/// Drives a fresh filter with a unit sine per grid frequency, drops the
/// settling periods, then least-squares fits y ~ p sin + q cos + c over the
/// measurement periods. The constant term absorbs offsets from integrating
/// filters. Results are independent of evaluation order.
std::vector<FrequencyResponsePoint> stepped_sine_bode(const DigitalFilterCoefficients& coeffs,
                                                      std::span<const double> freqs_hz,
                                                      const SteppedSineOptions& options = {});

struct ChirpBodeOptions {
  double window_cycles = 4.0;
  double hop_cycles = 1.0;
};

/// Filters the chirp, then demodulates input and output against the
/// generator's accumulated phase over sliding windows of window_cycles
/// instantaneous cycles, hopping by hop_cycles. One point per hop; windows
/// that would run past the end of the sweep are dropped.
///
/// Throws kRateMismatch if the chirp rate differs from the design rate and
/// kInvalidArgument if the sweep spans less than two decades.
std::vector<FrequencyResponsePoint> chirp_bode(const DigitalFilterCoefficients& coeffs,
                                               const ChirpSpec& spec,
                                               const ChirpBodeOptions& options = {});

/// Magnitudes below this are written (and compared) as this value.
inline constexpr double kMagnitudeFloorDb = -300.0;

struct ResponseErrorSummary {
  double max_abs_db = 0.0;
  double mean_abs_db = 0.0;
  double max_abs_deg = 0.0;
  double mean_abs_deg = 0.0;
  std::size_t points = 0;
};

/// Compares b against a on a's frequencies that fall inside b's range,
/// interpolating b linearly in log frequency. Phase differences are wrapped to
/// (-180, 180]. Throws kInvalidArgument when the ranges do not overlap.
ResponseErrorSummary compare_responses(std::span<const FrequencyResponsePoint> a,
                                       std::span<const FrequencyResponsePoint> b);

}  // namespace tustin
