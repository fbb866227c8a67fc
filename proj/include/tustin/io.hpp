#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tustin/analysis.hpp"
#include "tustin/signals.hpp"
#include "tustin/transfer_function.hpp"

namespace tustin::io {

/// JSON coefficient file. Keys, in order: order, a_hat, b_hat, loop_rate_hz,
/// provenance. Provenance holds the source transfer function as canonical
/// expression text (see format_expression) when known.
struct CoefficientFile {
  DigitalFilterCoefficients coeffs;
  std::string provenance;
};

std::string to_json(const CoefficientFile& file);

/// Rejects missing or extra keys and inconsistent lengths (kInvalidArgument).
CoefficientFile coefficient_file_from_json(std::string_view text);

/// "[9.4408E-04, 1.8882E-03]": five significant figures, scientific.
std::string format_coefficients(std::span<const double> values);

/// "time_s,value" with 9 significant digits.
std::string format_series_csv(const TimeSeries& series);

/// "time_s,input,output"; both series must have the same length.
std::string format_filter_csv(const TimeSeries& input, const TimeSeries& output);

/// Series from the first two numeric columns (time, value) of a CSV with an
/// optional header line. The sample rate is inferred from the time column,
/// which must be uniformly spaced. Throws kInvalidArgument.
TimeSeries parse_series_csv(std::string_view text);

/// "freq_hz,magnitude_db,phase_deg"; magnitudes clamped at kMagnitudeFloorDb.
std::string format_bode_csv(std::span<const FrequencyResponsePoint> points);
std::vector<FrequencyResponsePoint> parse_bode_csv(std::string_view text);

/// Throws kIo.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace tustin::io
