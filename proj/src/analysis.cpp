#include "tustin/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tustin/error.hpp"
#include "tustin/polynomial.hpp"
#include "tustin/runtime.hpp"

namespace tustin {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double to_db(double magnitude) {
  return magnitude == 0.0 ? -std::numeric_limits<double>::infinity()
                          : 20.0 * std::log10(magnitude);
}

double to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

FrequencyResponsePoint to_point(double freq_hz, std::complex<double> h) {
  return {freq_hz, to_db(std::abs(h)), to_deg(std::arg(h))};
}

// Least-squares fit of y ~ p sin + q cos + c, returning p + jq.
class SinusoidFit {
 public:
  void add(double y, double s, double c) {
    const std::array<double, 3> basis{s, c, 1.0};
    for (int i = 0; i < 3; ++i) {
      rhs_[i] += basis[i] * y;
      for (int j = 0; j < 3; ++j) normal_[i][j] += basis[i] * basis[j];
    }
  }

  std::complex<double> solve() const {
    auto m = normal_;
    auto b = rhs_;
    for (int col = 0; col < 3; ++col) {
      int pivot = col;
      for (int r = col + 1; r < 3; ++r) {
        if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
      }
      std::swap(m[col], m[pivot]);
      std::swap(b[col], b[pivot]);
      if (m[col][col] == 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "sinusoid fit is singular");
      }
      for (int r = col + 1; r < 3; ++r) {
        const double f = m[r][col] / m[col][col];
        for (int k = col; k < 3; ++k) m[r][k] -= f * m[col][k];
        b[r] -= f * b[col];
      }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
      double acc = b[r];
      for (int k = r + 1; k < 3; ++k) acc -= m[r][k] * x[k];
      x[r] = acc / m[r][r];
    }
    return {x[0], x[1]};
  }

 private:
  std::array<std::array<double, 3>, 3> normal_{};
  std::array<double, 3> rhs_{};
};

void check_rate_match(double signal_rate, double design_rate) {
  if (std::abs(signal_rate - design_rate) > kRateMatchTolerance * design_rate) {
    throw Error(ErrorCode::kRateMismatch, "signal rate " + std::to_string(signal_rate) +
                                              " Hz differs from design rate " +
                                              std::to_string(design_rate) + " Hz");
  }
}

}  // namespace

std::complex<double> analytic_response_continuous(const ContinuousTransferFunction& tf,
                                                  double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorCode::kInvalidArgument, "frequency must be positive and finite");
  }
  const std::complex<double> s(0.0, omega);
  const std::complex<double> den = evaluate(tf.denominator(), s);
  if (!(std::abs(den) >= std::numeric_limits<double>::min())) {
    throw Error(ErrorCode::kDenominatorZero,
                "denominator vanishes at omega = " + std::to_string(omega) + " rad/s");
  }
  return evaluate(tf.numerator(), s) / den;
}

std::complex<double> analytic_response_digital(const DigitalFilterCoefficients& coeffs,
                                               double omega) {
  const double nyquist = std::numbers::pi * coeffs.loop_rate_hz();
  if (!(omega > 0.0 && omega < nyquist)) {
    throw Error(ErrorCode::kAboveNyquist, "frequency " + std::to_string(omega) +
                                              " rad/s outside (0, " + std::to_string(nyquist) +
                                              ") rad/s");
  }
  // Polynomials in w = z^-1, expanded about c = +-1 (whichever is nearer)
  // and evaluated at w - c.
  const double theta = omega / coeffs.loop_rate_hz();
  const double c = std::cos(theta) >= 0.0 ? 1.0 : -1.0;
  const double half = std::sin(theta / 2.0), half_c = std::cos(theta / 2.0);
  const std::complex<double> offset =
      c > 0.0 ? std::complex<double>(-2.0 * half * half, -std::sin(theta))
              : std::complex<double>(2.0 * half_c * half_c, -std::sin(theta));

  std::vector<DoubleDouble> num(coeffs.a_hat().begin(), coeffs.a_hat().end());
  std::vector<DoubleDouble> den{DoubleDouble(1.0)};
  for (double b : coeffs.b_hat()) den.push_back(DoubleDouble(-b));
  auto shifted_eval = [&](std::vector<DoubleDouble> w_coeffs) {
    const PolynomialDD about_c = taylor_shift(PolynomialDD(std::move(w_coeffs)), c);
    return evaluate(round_to_double(about_c), offset);
  };
  return shifted_eval(std::move(num)) / shifted_eval(std::move(den));
}

std::vector<double> log_grid(double fmin_hz, double fmax_hz, std::size_t points) {
  if (!(fmin_hz > 0.0) || !(fmax_hz > fmin_hz) || !std::isfinite(fmax_hz) || points < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "log grid needs 0 < fmin < fmax and at least two points");
  }
  std::vector<double> grid(points);
  const double lo = std::log10(fmin_hz);
  const double hi = std::log10(fmax_hz);
  for (std::size_t i = 0; i < points; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = std::pow(10.0, std::lerp(lo, hi, u));
  }
  grid.front() = fmin_hz;
  grid.back() = fmax_hz;
  return grid;
}

void unwrap_phase(std::vector<FrequencyResponsePoint>& points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double jump = points[i].phase_deg - points[i - 1].phase_deg;
    points[i].phase_deg -= 360.0 * std::round(jump / 360.0);
  }
}

std::vector<FrequencyResponsePoint> analytic_bode_continuous(const ContinuousTransferFunction& tf,
                                                             std::span<const double> freqs_hz) {
  std::vector<FrequencyResponsePoint> out;
  out.reserve(freqs_hz.size());
  for (double f : freqs_hz) out.push_back(to_point(f, analytic_response_continuous(tf, kTwoPi * f)));
  unwrap_phase(out);
  return out;
}

std::vector<FrequencyResponsePoint> analytic_bode_digital(const DigitalFilterCoefficients& coeffs,
                                                          std::span<const double> freqs_hz) {
  std::vector<FrequencyResponsePoint> out;
  out.reserve(freqs_hz.size());
  for (double f : freqs_hz) out.push_back(to_point(f, analytic_response_digital(coeffs, kTwoPi * f)));
  unwrap_phase(out);
  return out;
}

std::vector<FrequencyResponsePoint> stepped_sine_bode(const DigitalFilterCoefficients& coeffs,
                                                      std::span<const double> freqs_hz,
                                                      const SteppedSineOptions& options) {
  if (options.settle_cycles < 5 || options.measure_cycles < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "stepped sine needs at least 5 settle cycles and 2 measure cycles");
  }
  const double fs = coeffs.loop_rate_hz();
  for (double f : freqs_hz) {
    if (!(f > 0.0 && f < kSteppedSineMaxFraction * fs)) {
      throw Error(ErrorCode::kAboveNyquist,
                  "stepped-sine frequency " + std::to_string(f) + " Hz must lie in (0, " +
                      std::to_string(kSteppedSineMaxFraction * fs) + ") Hz");
    }
  }

  std::vector<FrequencyResponsePoint> out;
  out.reserve(freqs_hz.size());
  FilterState state(coeffs);
  for (double f : freqs_hz) {
    state.reset();
    const double samples_per_cycle = fs / f;
    const auto settle = static_cast<std::size_t>(std::ceil(options.settle_cycles * samples_per_cycle));
    const auto measure =
        static_cast<std::size_t>(std::ceil(options.measure_cycles * samples_per_cycle));
    const double w = kTwoPi * f;
    SinusoidFit fit;
    for (std::size_t i = 0; i < settle + measure; ++i) {
      const double phase = w * (static_cast<double>(i) / fs);
      const double s = std::sin(phase);
      const double y = state.tick(s);
      if (i >= settle) fit.add(y, s, std::cos(phase));
    }
    out.push_back(to_point(f, fit.solve()));
  }
  unwrap_phase(out);
  return out;
}

std::vector<FrequencyResponsePoint> chirp_bode(const DigitalFilterCoefficients& coeffs,
                                               const ChirpSpec& spec,
                                               const ChirpBodeOptions& options) {
  spec.validate();
  check_rate_match(spec.sample_rate, coeffs.loop_rate_hz());
  if (spec.omega_max < 100.0 * spec.omega_min) {
    throw Error(ErrorCode::kInvalidArgument, "chirp sweep must cover at least two decades");
  }
  if (!(options.window_cycles > 0.0) || !(options.hop_cycles > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "window and hop must be positive cycle counts");
  }

  const ChirpTrace trace = generate_chirp_trace(spec);
  const TimeSeries response = process(coeffs, trace.signal);
  const auto& x = trace.signal.samples();
  const auto& y = response.samples();
  const auto& phase = trace.phase;
  const std::size_t n = x.size();

  std::vector<double> sin_phase(n);
  std::vector<double> cos_phase(n);
  for (std::size_t i = 0; i < n; ++i) {
    sin_phase[i] = std::sin(phase[i]);
    cos_phase[i] = std::cos(phase[i]);
  }

  const double window = kTwoPi * options.window_cycles;
  const double hop = kTwoPi * options.hop_cycles;
  std::vector<FrequencyResponsePoint> out;
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t center = 0;
  while (start < n) {
    const double phi0 = phase[start];
    end = std::max(end, start);
    while (end < n && phase[end] - phi0 < window) ++end;
    if (end >= n) break;  // window would run past the sweep
    center = std::max(center, start);
    while (phase[center] - phi0 < 0.5 * window) ++center;

    SinusoidFit fit_in;
    SinusoidFit fit_out;
    for (std::size_t i = start; i < end; ++i) {
      fit_in.add(x[i], sin_phase[i], cos_phase[i]);
      fit_out.add(y[i], sin_phase[i], cos_phase[i]);
    }
    const double t_center = std::min(static_cast<double>(center) / spec.sample_rate, spec.duration);
    const double f_center = instantaneous_frequency(spec, t_center) / kTwoPi;
    out.push_back(to_point(f_center, fit_out.solve() / fit_in.solve()));

    std::size_t next = start;
    while (next < n && phase[next] - phi0 < hop) ++next;
    if (next == start) ++next;
    start = next;
  }
  unwrap_phase(out);
  return out;
}

ResponseErrorSummary compare_responses(std::span<const FrequencyResponsePoint> a,
                                       std::span<const FrequencyResponsePoint> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot compare empty responses");
  }
  auto clamp_db = [](double db) { return std::max(db, kMagnitudeFloorDb); };
  auto wrap_deg = [](double d) {
    d = std::remainder(d, 360.0);
    return d == -180.0 ? 180.0 : d;
  };

  const double b_lo = b.front().freq_hz;
  const double b_hi = b.back().freq_hz;
  ResponseErrorSummary summary;
  double sum_db = 0.0;
  double sum_deg = 0.0;
  std::size_t j = 0;
  for (const auto& pa : a) {
    const double f = pa.freq_hz;
    if (f < b_lo || f > b_hi) continue;
    while (j + 1 < b.size() && b[j + 1].freq_hz < f) ++j;
    double mag = clamp_db(b[j].magnitude_db);
    double ph = b[j].phase_deg;
    if (j + 1 < b.size() && f > b[j].freq_hz) {
      const auto& lo = b[j];
      const auto& hi = b[j + 1];
      const double u = (std::log(f) - std::log(lo.freq_hz)) /
                       (std::log(hi.freq_hz) - std::log(lo.freq_hz));
      mag = std::lerp(clamp_db(lo.magnitude_db), clamp_db(hi.magnitude_db), u);
      ph = std::lerp(lo.phase_deg, hi.phase_deg, u);
    }
    const double d_db = std::abs(clamp_db(pa.magnitude_db) - mag);
    const double d_deg = std::abs(wrap_deg(pa.phase_deg - ph));
    summary.max_abs_db = std::max(summary.max_abs_db, d_db);
    summary.max_abs_deg = std::max(summary.max_abs_deg, d_deg);
    sum_db += d_db;
    sum_deg += d_deg;
    ++summary.points;
  }
  if (summary.points == 0) {
    throw Error(ErrorCode::kInvalidArgument, "responses cover disjoint frequency ranges");
  }
  summary.mean_abs_db = sum_db / static_cast<double>(summary.points);
  summary.mean_abs_deg = sum_deg / static_cast<double>(summary.points);
  return summary;
}

}  // namespace tustin
