#include "tustin/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tustin/error.hpp"

namespace tustin {
namespace {

std::size_t checked_sample_count(double duration, double sample_rate) {
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
    throw Error(ErrorCode::kNonPositiveRate, "sample rate must be positive and finite");
  }
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw Error(ErrorCode::kInvalidArgument, "duration must be positive and finite");
  }
  const double count = std::round(duration * sample_rate);
  if (!(count <= static_cast<double>(kMaxGeneratedSamples))) {
    throw Error(ErrorCode::kSampleCountOverflow,
                "signal would need more than " + std::to_string(kMaxGeneratedSamples) + " samples");
  }
  if (count < 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "duration is shorter than one sample period");
  }
  return static_cast<std::size_t>(count);
}

}  // namespace

TimeSeries::TimeSeries(double sample_rate, std::vector<double> samples, double t0)
    : sample_rate_(sample_rate), samples_(std::move(samples)), t0_(t0) {
  if (!(sample_rate_ > 0.0) || !std::isfinite(sample_rate_)) {
    throw Error(ErrorCode::kNonPositiveRate, "sample rate must be positive and finite");
  }
  if (!std::isfinite(t0_) ||
      !std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::kInvalidArgument, "time series samples must be finite");
  }
}

void ChirpSpec::validate() const {
  if (!std::isfinite(omega_min) || !std::isfinite(omega_max) || !std::isfinite(amplitude)) {
    throw Error(ErrorCode::kInvalidArgument, "chirp parameters must be finite");
  }
  if (!(omega_min > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "chirp minimum frequency must be positive");
  }
  if (!(omega_max > omega_min)) {
    throw Error(ErrorCode::kInvalidArgument,
                "chirp maximum frequency must exceed the minimum frequency");
  }
  checked_sample_count(duration, sample_rate);
}

std::size_t ChirpSpec::sample_count() const {
  return checked_sample_count(duration, sample_rate);
}

double instantaneous_frequency(const ChirpSpec& spec, double t) {
  if (!(t >= 0.0 && t <= spec.duration)) {
    throw Error(ErrorCode::kOutOfRange, "time " + std::to_string(t) + " outside chirp duration");
  }
  const double u = t / spec.duration;
  switch (spec.kind) {
    case ChirpKind::kLinear:
      return std::lerp(spec.omega_min, spec.omega_max, u);
    case ChirpKind::kExponential:
      // omega_min * (omega_max / omega_min)^u, split so both endpoints are exact.
      return std::pow(spec.omega_min, 1.0 - u) * std::pow(spec.omega_max, u);
  }
  return spec.omega_min;
}

ChirpGenerator::ChirpGenerator(const ChirpSpec& spec) : spec_(spec), dt_(1.0 / spec.sample_rate) {
  spec_.validate();
}

double ChirpGenerator::next() {
  const double out = spec_.amplitude * sin_;
  const double t = std::min(static_cast<double>(index_) * dt_, spec_.duration);
  const double step = instantaneous_frequency(spec_, t) * dt_;
  const double c = std::cos(step);
  const double s = std::sin(step);
  const double cos_next = c * cos_ - s * sin_;
  const double sin_next = s * cos_ + c * sin_;
  cos_ = cos_next;
  sin_ = sin_next;
  phase_ += step;
  ++index_;
  return out;
}

ChirpTrace generate_chirp_trace(const ChirpSpec& spec) {
  ChirpGenerator gen(spec);
  const std::size_t n = spec.sample_count();
  std::vector<double> samples(n);
  std::vector<double> phase(n);
  for (std::size_t i = 0; i < n; ++i) {
    phase[i] = gen.phase();
    samples[i] = gen.next();
  }
  return {TimeSeries(spec.sample_rate, std::move(samples)), std::move(phase)};
}

TimeSeries generate_chirp(const ChirpSpec& spec) {
  return generate_chirp_trace(spec).signal;
}

TimeSeries generate_sine(double freq_hz, double amplitude, double offset, double duration,
                         double sample_rate) {
  if (!std::isfinite(freq_hz) || !std::isfinite(amplitude) || !std::isfinite(offset)) {
    throw Error(ErrorCode::kInvalidArgument, "sine parameters must be finite");
  }
  const std::size_t n = checked_sample_count(duration, sample_rate);
  const double w = 2.0 * std::numbers::pi * freq_hz;
  std::vector<double> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    samples[i] = amplitude * std::sin(w * (static_cast<double>(i) / sample_rate)) + offset;
  }
  return TimeSeries(sample_rate, std::move(samples));
}

}  // namespace tustin
