#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tustin {

/// Uniformly sampled signal: samples[i] is taken at t0 + i / sample_rate.
class TimeSeries {
 public:
  /// Throws kNonPositiveRate or kInvalidArgument (non-finite samples or t0).
  TimeSeries(double sample_rate, std::vector<double> samples, double t0 = 0.0);

  double sample_rate() const noexcept { return sample_rate_; }
  double dt() const noexcept { return 1.0 / sample_rate_; }
  double t0() const noexcept { return t0_; }
  double time(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) / sample_rate_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const std::vector<double>& samples() const noexcept { return samples_; }

 private:
  double sample_rate_;
  std::vector<double> samples_;
  double t0_;
};

enum class ChirpKind { kLinear, kExponential };

inline constexpr std::uint64_t kMaxGeneratedSamples = 1'000'000'000;

/// Frequency sweep from omega_min to omega_max (rad/s) over duration seconds.
struct ChirpSpec {
  ChirpKind kind = ChirpKind::kExponential;
  double omega_min = 0.0;
  double omega_max = 0.0;
  double duration = 0.0;
  double amplitude = 1.0;
  double sample_rate = 0.0;

  /// Throws kInvalidArgument, kNonPositiveRate or kSampleCountOverflow.
  void validate() const;

  /// round(duration * sample_rate); sample i sits at t = i / sample_rate.
  std::size_t sample_count() const;
};

/// omega_c(t) for 0 <= t <= duration; exact at both endpoints.
/// Throws kOutOfRange outside that interval.
double instantaneous_frequency(const ChirpSpec& spec, double t);

/// Sample-by-sample chirp via the rotation recursion
///   cos_i = cos(w dt) cos_{i-1} - sin(w dt) sin_{i-1}
///   sin_i = sin(w dt) cos_{i-1} + cos(w dt) sin_{i-1}
/// seeded (cos_0, sin_0) = (1, 0), output A * sin_i. The step from sample i
/// to i+1 uses w = omega_c(i dt).
class ChirpGenerator {
 public:
  explicit ChirpGenerator(const ChirpSpec& spec);

  /// Current sample A * sin_i, then advances to i + 1.
  double next();

  std::size_t index() const noexcept { return index_; }
  double cos_state() const noexcept { return cos_; }
  double sin_state() const noexcept { return sin_; }
  /// Accumulated phase sum_{k < i} omega_c(k dt) dt of the current sample.
  double phase() const noexcept { return phase_; }

 private:
  ChirpSpec spec_;
  double dt_;
  std::size_t index_ = 0;
  double cos_ = 1.0;
  double sin_ = 0.0;
  double phase_ = 0.0;
};

TimeSeries generate_chirp(const ChirpSpec& spec);

/// Chirp samples together with the generator's accumulated phase per sample.
struct ChirpTrace {
  TimeSeries signal;
  std::vector<double> phase;
};

ChirpTrace generate_chirp_trace(const ChirpSpec& spec);

/// samples[i] = amplitude * sin(2 pi freq_hz i dt) + offset, round(duration * rate) samples.
TimeSeries generate_sine(double freq_hz, double amplitude, double offset, double duration,
                         double sample_rate);

}  // namespace tustin
