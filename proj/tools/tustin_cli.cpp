// tustin: design, filter, chirp, bode, compare.
//
// Frequencies on the command line are in Hz; the library works in rad/s
// (omega = 2 pi f).

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tustin/analysis.hpp"
#include "tustin/catalog.hpp"
#include "tustin/discretize.hpp"
#include "tustin/error.hpp"
#include "tustin/io.hpp"
#include "tustin/runtime.hpp"
#include "tustin/signals.hpp"
#include "tustin/tfparse.hpp"

using namespace tustin;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr int kExitThreshold = 1;
constexpr int kExitParse = 2;
constexpr int kExitNonCausal = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitInvalid = 5;
constexpr int kExitIo = 6;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTfSyntax:
      return kExitParse;
    case ErrorCode::kNonCausal:
      return kExitNonCausal;
    case ErrorCode::kDegenerateLeadingCoefficient:
      return kExitDegenerate;
    case ErrorCode::kIo:
      return kExitIo;
    default:
      return kExitInvalid;
  }
}

Error invalid(const std::string& message) { return Error(ErrorCode::kInvalidArgument, message); }

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    io::write_file(*path, text);
  } else {
    std::cout << text;
  }
}

struct TfSource {
  std::optional<std::string> tf;
  std::optional<std::string> num;
  std::optional<std::string> den;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--tf", tf, "Rational expression in s, e.g. \"1/(10s + 1)\"");
    cmd->add_option("--num", num, "Numerator coefficients, descending powers, e.g. 1,0");
    cmd->add_option("--den", den, "Denominator coefficients, descending powers");
  }

  bool given() const { return tf || num || den; }

  ContinuousTransferFunction resolve() const {
    if (tf && (num || den)) throw invalid("give either --tf or --num/--den, not both");
    if (tf) return parse_expression(*tf);
    if (!num || !den) throw invalid("--num and --den must be given together");
    return parse_coeff_lists(*num, *den);
  }
};

// ---- design ---------------------------------------------------------------

struct DesignArgs {
  std::string family;
  TfSource source;
  std::optional<double> rate;
  std::optional<double> cutoff_hz, notch_hz, q, kp, ki, kd, tau, gain, zero_hz, pole_hz;
  std::optional<std::string> out;
};

double need(const std::optional<double>& v, const char* flag, const std::string& family) {
  if (!v) throw invalid(std::string(flag) + " is required for " + family);
  return *v;
}

ContinuousTransferFunction family_tf(const DesignArgs& a) {
  const std::string& f = a.family;
  if (f == "lowpass1") return catalog::lowpass1(kTwoPi * need(a.cutoff_hz, "--cutoff-hz", f));
  if (f == "butter2") return catalog::butterworth2(kTwoPi * need(a.cutoff_hz, "--cutoff-hz", f));
  if (f == "notch") {
    return catalog::notch(kTwoPi * need(a.notch_hz, "--notch-hz", f), need(a.q, "--q", f));
  }
  if (f == "pid") {
    return catalog::pid(need(a.kp, "--kp", f), need(a.ki, "--ki", f), need(a.kd, "--kd", f),
                        need(a.tau, "--tau", f));
  }
  if (f == "leadlag") {
    return catalog::leadlag(need(a.gain, "--gain", f), kTwoPi * need(a.zero_hz, "--zero-hz", f),
                            kTwoPi * need(a.pole_hz, "--pole-hz", f));
  }
  return catalog::multiorder_example();
}

constexpr double kUnitCircleMargin = 1e-9;

int run_design(const DesignArgs& a) {
  if (!a.family.empty() && a.source.given()) {
    throw invalid("give a design family or --tf/--num/--den, not both");
  }
  if (a.family.empty() && !a.source.given()) {
    throw invalid("no transfer function: give a design family, --tf, or --num/--den");
  }
  const ContinuousTransferFunction tf = a.family.empty() ? a.source.resolve() : family_tf(a);
  const auto coeffs = tustin_horner(tf, *a.rate);

  std::printf("a_hat = %s\n", io::format_coefficients(coeffs.a_hat()).c_str());
  std::printf("b_hat = %s\n", io::format_coefficients(coeffs.b_hat()).c_str());
  std::vector<double> radii;
  for (const auto& p : digital_poles(coeffs)) radii.push_back(std::abs(p));
  std::printf("pole_radii = %s\n", io::format_coefficients(radii).c_str());
  for (double r : radii) {
    if (r > 1.0 + kUnitCircleMargin) {
      std::fprintf(stderr, "warning: z-pole radius %.5E exceeds 1; the digital filter is unstable\n",
                   r);
    } else if (r > 1.0 - kUnitCircleMargin) {
      std::fprintf(stderr, "note: z-pole on the unit circle (radius %.12f); marginally stable\n", r);
    }
  }
  if (a.out) io::write_file(*a.out, io::to_json({coeffs, format_expression(tf)}));
  return 0;
}

// ---- chirp / sine ---------------------------------------------------------

struct ChirpArgs {
  std::string kind = "exponential";
  double fmin_hz = 0.0, fmax_hz = 0.0, duration = 0.0, amplitude = 1.0, rate = 0.0;
  std::optional<std::string> out;
};

ChirpKind parse_kind(const std::string& kind) {
  return kind == "linear" ? ChirpKind::kLinear : ChirpKind::kExponential;
}

int run_chirp(const ChirpArgs& a) {
  const ChirpSpec spec{parse_kind(a.kind), kTwoPi * a.fmin_hz, kTwoPi * a.fmax_hz, a.duration,
                       a.amplitude, a.rate};
  emit(a.out, io::format_series_csv(generate_chirp(spec)));
  return 0;
}

struct SineArgs {
  double freq_hz = 0.0, amplitude = 1.0, offset = 0.0, duration = 0.0, rate = 0.0;
  std::optional<std::string> out;
};

int run_sine(const SineArgs& a) {
  emit(a.out, io::format_series_csv(
                  generate_sine(a.freq_hz, a.amplitude, a.offset, a.duration, a.rate)));
  return 0;
}

// ---- filter ---------------------------------------------------------------

// The time column carries 9 significant digits, so the inferred rate is only
// that accurate.
constexpr double kCsvRateTolerance = 1e-6;

struct FilterArgs {
  std::string coeffs, input;
  bool no_heuristic = false;
  std::optional<std::string> out;
};

int run_filter(const FilterArgs& a) {
  const auto file = io::coefficient_file_from_json(io::read_file(a.coeffs));
  const TimeSeries parsed = io::parse_series_csv(io::read_file(a.input));
  const double rate = file.coeffs.loop_rate_hz();
  if (parsed.size() > 1 &&
      std::abs(parsed.sample_rate() - rate) > kCsvRateTolerance * rate) {
    throw Error(ErrorCode::kRateMismatch,
                "input sampled at " + std::to_string(parsed.sample_rate()) +
                    " Hz but coefficients were designed for " + std::to_string(rate) + " Hz");
  }
  const std::span<const double> samples = parsed.samples();
  const TimeSeries input(rate, std::vector<double>(samples.begin(), samples.end()), parsed.t0());
  const auto mode = a.no_heuristic ? StartupMode::kZero : StartupMode::kFillWithFirstInput;
  emit(a.out, io::format_filter_csv(input, process(file.coeffs, input, mode)));
  return 0;
}

// ---- bode -----------------------------------------------------------------

struct BodeArgs {
  std::string method;
  std::optional<std::string> coeffs;
  TfSource source;
  std::optional<double> rate;
  double fmin_hz = 0.0, fmax_hz = 0.0;
  std::size_t points = 50;
  int settle_cycles = SteppedSineOptions{}.settle_cycles;
  int measure_cycles = SteppedSineOptions{}.measure_cycles;
  std::string kind = "exponential";
  std::optional<double> duration;
  double window_cycles = ChirpBodeOptions{}.window_cycles;
  double hop_cycles = ChirpBodeOptions{}.hop_cycles;
  std::optional<std::string> out;
};

struct BodeInputs {
  std::optional<ContinuousTransferFunction> tf;
  std::optional<DigitalFilterCoefficients> coeffs;
};

BodeInputs load_bode_inputs(const BodeArgs& a) {
  if (a.coeffs && a.source.given()) throw invalid("give either --coeffs or a transfer function");
  BodeInputs in;
  if (a.coeffs) {
    auto file = io::coefficient_file_from_json(io::read_file(*a.coeffs));
    if (!file.provenance.empty()) in.tf = parse_expression(file.provenance);
    in.coeffs = file.coeffs;
    return in;
  }
  if (!a.source.given()) throw invalid("no filter: give --coeffs, --tf, or --num/--den");
  in.tf = a.source.resolve();
  if (a.rate) in.coeffs = tustin_horner(*in.tf, *a.rate);
  return in;
}

int run_bode(const BodeArgs& a) {
  const BodeInputs in = load_bode_inputs(a);
  std::vector<FrequencyResponsePoint> points;
  if (a.method == "analytic-continuous") {
    if (!in.tf) throw invalid("coefficient file carries no source transfer function");
    points = analytic_bode_continuous(*in.tf, log_grid(a.fmin_hz, a.fmax_hz, a.points));
  } else {
    if (!in.coeffs) throw invalid("--rate is required to discretize the transfer function");
    if (a.method == "analytic-digital") {
      points = analytic_bode_digital(*in.coeffs, log_grid(a.fmin_hz, a.fmax_hz, a.points));
    } else if (a.method == "stepped") {
      points = stepped_sine_bode(*in.coeffs, log_grid(a.fmin_hz, a.fmax_hz, a.points),
                                 {a.settle_cycles, a.measure_cycles});
    } else {
      if (!a.duration) throw invalid("--duration is required for the chirp method");
      const ChirpSpec spec{parse_kind(a.kind),  kTwoPi * a.fmin_hz, kTwoPi * a.fmax_hz,
                           *a.duration,         1.0,                in.coeffs->loop_rate_hz()};
      points = chirp_bode(*in.coeffs, spec, {a.window_cycles, a.hop_cycles});
    }
  }
  emit(a.out, io::format_bode_csv(points));
  return 0;
}

// ---- compare --------------------------------------------------------------

struct CompareArgs {
  std::string a, b;
  std::optional<double> max_db, max_deg;
};

int run_compare(const CompareArgs& a) {
  const auto first = io::parse_bode_csv(io::read_file(a.a));
  const auto second = io::parse_bode_csv(io::read_file(a.b));
  const ResponseErrorSummary s = compare_responses(first, second);
  std::printf("points = %zu\n", s.points);
  std::printf("max_abs_db = %.6g\n", s.max_abs_db);
  std::printf("mean_abs_db = %.6g\n", s.mean_abs_db);
  std::printf("max_abs_deg = %.6g\n", s.max_abs_deg);
  std::printf("mean_abs_deg = %.6g\n", s.mean_abs_deg);
  bool exceeded = false;
  if (a.max_db && s.max_abs_db > *a.max_db) {
    std::printf("FAIL magnitude deviation %.6g dB exceeds %.6g dB\n", s.max_abs_db, *a.max_db);
    exceeded = true;
  }
  if (a.max_deg && s.max_abs_deg > *a.max_deg) {
    std::printf("FAIL phase deviation %.6g deg exceeds %.6g deg\n", s.max_abs_deg, *a.max_deg);
    exceeded = true;
  }
  return exceeded ? kExitThreshold : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tustin bilinear discretization of continuous transfer functions"};
  app.require_subcommand(1);
  app.footer("Frequencies are in Hz. TUSTIN_SEED is reserved; every command is deterministic.");

  DesignArgs design;
  auto* design_cmd = app.add_subcommand("design", "Discretize a transfer function");
  design_cmd->add_option("family", design.family, "Catalog filter family")
      ->check(CLI::IsMember({"lowpass1", "butter2", "notch", "pid", "leadlag", "multiorder"}));
  design.source.add_to(design_cmd);
  design_cmd->add_option("--rate", design.rate, "Loop rate in Hz")->required();
  design_cmd->add_option("--cutoff-hz", design.cutoff_hz, "lowpass1, butter2: corner frequency");
  design_cmd->add_option("--notch-hz", design.notch_hz, "notch: center frequency");
  design_cmd->add_option("--q", design.q, "notch: quality factor");
  design_cmd->add_option("--kp", design.kp, "pid: proportional gain");
  design_cmd->add_option("--ki", design.ki, "pid: integral gain");
  design_cmd->add_option("--kd", design.kd, "pid: derivative gain");
  design_cmd->add_option("--tau", design.tau, "pid: derivative filter corner, rad/s");
  design_cmd->add_option("--gain", design.gain, "leadlag: high-frequency gain K");
  design_cmd->add_option("--zero-hz", design.zero_hz, "leadlag: zero frequency");
  design_cmd->add_option("--pole-hz", design.pole_hz, "leadlag: pole frequency");
  design_cmd->add_option("-o,--out", design.out, "Write the coefficient file (JSON)");

  ChirpArgs chirp;
  auto* chirp_cmd = app.add_subcommand("chirp", "Generate a chirp as time_s,value CSV");
  chirp_cmd->add_option("--kind", chirp.kind)->check(CLI::IsMember({"linear", "exponential"}));
  chirp_cmd->add_option("--fmin-hz", chirp.fmin_hz)->required();
  chirp_cmd->add_option("--fmax-hz", chirp.fmax_hz)->required();
  chirp_cmd->add_option("--duration", chirp.duration, "Seconds")->required();
  chirp_cmd->add_option("--amplitude", chirp.amplitude);
  chirp_cmd->add_option("--rate", chirp.rate, "Sample rate in Hz")->required();
  chirp_cmd->add_option("-o,--out", chirp.out);

  SineArgs sine;
  auto* sine_cmd = app.add_subcommand("sine", "Generate offset + A sin(2 pi f t) as CSV");
  sine_cmd->add_option("--freq-hz", sine.freq_hz)->required();
  sine_cmd->add_option("--amplitude", sine.amplitude);
  sine_cmd->add_option("--offset", sine.offset);
  sine_cmd->add_option("--duration", sine.duration, "Seconds")->required();
  sine_cmd->add_option("--rate", sine.rate, "Sample rate in Hz")->required();
  sine_cmd->add_option("-o,--out", sine.out);

  FilterArgs filter;
  auto* filter_cmd = app.add_subcommand("filter", "Run the difference equation over a CSV");
  filter_cmd->add_option("--coeffs", filter.coeffs, "Coefficient file from design")->required();
  filter_cmd->add_option("--input", filter.input, "time_s,value CSV")->required();
  filter_cmd->add_flag("--no-heuristic", filter.no_heuristic,
                       "Start from zero histories instead of the first input");
  filter_cmd->add_option("-o,--out", filter.out);

  BodeArgs bode;
  auto* bode_cmd = app.add_subcommand("bode", "Frequency response as freq_hz,magnitude_db,phase_deg");
  bode_cmd->add_option("--method", bode.method)
      ->required()
      ->check(CLI::IsMember({"analytic-continuous", "analytic-digital", "stepped", "chirp"}));
  bode_cmd->add_option("--coeffs", bode.coeffs, "Coefficient file from design");
  bode.source.add_to(bode_cmd);
  bode_cmd->add_option("--rate", bode.rate, "Loop rate in Hz when discretizing --tf/--num/--den");
  bode_cmd->add_option("--fmin-hz", bode.fmin_hz)->required();
  bode_cmd->add_option("--fmax-hz", bode.fmax_hz)->required();
  bode_cmd->add_option("--points", bode.points, "Log-spaced grid points");
  bode_cmd->add_option("--settle-cycles", bode.settle_cycles, "stepped: periods discarded");
  bode_cmd->add_option("--measure-cycles", bode.measure_cycles, "stepped: periods fitted");
  bode_cmd->add_option("--kind", bode.kind, "chirp: sweep kind")
      ->check(CLI::IsMember({"linear", "exponential"}));
  bode_cmd->add_option("--duration", bode.duration, "chirp: sweep length in seconds");
  bode_cmd->add_option("--window-cycles", bode.window_cycles, "chirp: demodulation window");
  bode_cmd->add_option("--hop-cycles", bode.hop_cycles, "chirp: window hop");
  bode_cmd->add_option("-o,--out", bode.out);

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Deviation between two Bode CSVs");
  compare_cmd->add_option("reference", compare.a)->required();
  compare_cmd->add_option("candidate", compare.b)->required();
  compare_cmd->add_option("--max-db", compare.max_db);
  compare_cmd->add_option("--max-deg", compare.max_deg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    for (char& c : message) {
      if (c == '\n') c = ' ';
    }
    std::fprintf(stderr, "error[usage]: %s\n", message.c_str());
    return kExitInvalid;
  }

  try {
    if (*design_cmd) return run_design(design);
    if (*chirp_cmd) return run_chirp(chirp);
    if (*sine_cmd) return run_sine(sine);
    if (*filter_cmd) return run_filter(filter);
    if (*bode_cmd) return run_bode(bode);
    return run_compare(compare);
  } catch (const Error& e) {
    std::fprintf(stderr, "error[%s]: %s\n", std::string(error_slug(e.code())).c_str(), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error[internal]: %s\n", e.what());
    return kExitInvalid;
  }
}
