#include "tustin/runtime.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tustin/error.hpp"

namespace tustin {
namespace {

// sum_k w[k] * ring[(head + k) % size]
double ring_dot(std::span<const double> w, const std::vector<double>& ring, std::size_t head) {
  const std::size_t n = ring.size();
  const std::size_t first = n - head;
  double acc = 0.0;
  for (std::size_t k = 0; k < first; ++k) acc += w[k] * ring[head + k];
  for (std::size_t k = first; k < n; ++k) acc += w[k] * ring[k - first];
  return acc;
}

}  // namespace

FilterState::FilterState(DigitalFilterCoefficients coeffs, StartupMode mode)
    : coeffs_(std::move(coeffs)),
      mode_(mode),
      x_(coeffs_.order() + 1, 0.0),
      y_(coeffs_.order(), 0.0) {}

double FilterState::tick(double x0) {
  if (!std::isfinite(x0)) {
    throw Error(ErrorCode::kInvalidArgument, "filter input must be finite");
  }
  if (std::fpclassify(x0) == FP_SUBNORMAL) x0 = 0.0;

  if (first_tick_) {
    if (mode_ == StartupMode::kFillWithFirstInput) {
      std::fill(x_.begin(), x_.end(), x0);
      std::fill(y_.begin(), y_.end(), x0);
    }
    first_tick_ = false;
  }

  x_head_ = (x_head_ == 0 ? x_.size() : x_head_) - 1;
  x_[x_head_] = x0;

  double y0 = ring_dot(coeffs_.a_hat(), x_, x_head_);
  if (!y_.empty()) {
    y0 += ring_dot(coeffs_.b_hat(), y_, y_head_);
    y_head_ = (y_head_ == 0 ? y_.size() : y_head_) - 1;
    y_[y_head_] = y0;
  }
  return y0;
}

void FilterState::reset() {
  std::fill(x_.begin(), x_.end(), 0.0);
  std::fill(y_.begin(), y_.end(), 0.0);
  x_head_ = 0;
  y_head_ = 0;
  first_tick_ = true;
}

std::vector<double> FilterState::input_history() const {
  std::vector<double> out(x_.size());
  for (std::size_t k = 0; k < x_.size(); ++k) out[k] = x_[(x_head_ + k) % x_.size()];
  return out;
}

std::vector<double> FilterState::output_history() const {
  std::vector<double> out(y_.size());
  for (std::size_t k = 0; k < y_.size(); ++k) out[k] = y_[(y_head_ + k) % y_.size()];
  return out;
}

TimeSeries process(const DigitalFilterCoefficients& coeffs, const TimeSeries& input,
                   StartupMode mode) {
  const double design = coeffs.loop_rate_hz();
  if (std::abs(input.sample_rate() - design) > kRateMatchTolerance * design) {
    throw Error(ErrorCode::kRateMismatch,
                "input sampled at " + std::to_string(input.sample_rate()) +
                    " Hz but the filter was designed for " + std::to_string(design) + " Hz");
  }
  FilterState state(coeffs, mode);
  std::vector<double> out;
  out.reserve(input.size());
  for (double x : input.samples()) out.push_back(state.tick(x));
  return TimeSeries(input.sample_rate(), std::move(out), input.t0());
}

}  // namespace tustin
