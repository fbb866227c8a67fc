#include "tustin/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tustin/error.hpp"

namespace tustin::io {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

// Parses every comma-separated field as a double; false if any field is not numeric.
bool parse_row(std::string_view line, std::vector<double>& out) {
  out.clear();
  std::size_t pos = 0;
  for (;;) {
    std::size_t end = line.find(',', pos);
    if (end == std::string_view::npos) end = line.size();
    std::string field(line.substr(pos, end - pos));
    char* stop = nullptr;
    const double v = std::strtod(field.c_str(), &stop);
    while (stop && (*stop == ' ' || *stop == '\t')) ++stop;
    if (field.empty() || stop == field.c_str() || *stop != '\0') return false;
    out.push_back(v);
    if (end == line.size()) return true;
    pos = end + 1;
  }
}

std::vector<std::vector<double>> parse_table(std::string_view text, std::size_t min_columns,
                                             const char* what) {
  const auto lines = split_lines(text);
  std::vector<std::vector<double>> rows;
  std::vector<double> row;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!parse_row(lines[i], row)) {
      if (i == 0) continue;  // header
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + ": non-numeric row " + std::to_string(i + 1));
    }
    if (row.size() < min_columns) {
      throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": row " +
                                                   std::to_string(i + 1) + " has too few columns");
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> json_vector(const ordered_json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_array()) throw Error(ErrorCode::kInvalidArgument, std::string(key) + " must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) {
      throw Error(ErrorCode::kInvalidArgument, std::string(key) + " must hold numbers");
    }
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

std::string to_json(const CoefficientFile& file) {
  ordered_json j;
  j["order"] = file.coeffs.order();
  j["a_hat"] = std::vector<double>(file.coeffs.a_hat().begin(), file.coeffs.a_hat().end());
  j["b_hat"] = std::vector<double>(file.coeffs.b_hat().begin(), file.coeffs.b_hat().end());
  j["loop_rate_hz"] = file.coeffs.loop_rate_hz();
  j["provenance"] = file.provenance;
  return j.dump(2) + "\n";
}

CoefficientFile coefficient_file_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("coefficient file: ") + e.what());
  }
  static constexpr std::array<const char*, 5> kKeys{"order", "a_hat", "b_hat", "loop_rate_hz",
                                                    "provenance"};
  if (!j.is_object() || j.size() != kKeys.size() ||
      !std::all_of(kKeys.begin(), kKeys.end(), [&](const char* k) { return j.contains(k); })) {
    throw Error(ErrorCode::kInvalidArgument,
                "coefficient file must hold exactly: order, a_hat, b_hat, loop_rate_hz, provenance");
  }
  if (!j["order"].is_number_unsigned() || !j["loop_rate_hz"].is_number() ||
      !j["provenance"].is_string()) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient file has mistyped fields");
  }
  DigitalFilterCoefficients coeffs(json_vector(j, "a_hat"), json_vector(j, "b_hat"),
                                   j["loop_rate_hz"].get<double>());
  if (coeffs.order() != j["order"].get<std::size_t>()) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient file order disagrees with b_hat length");
  }
  return {std::move(coeffs), j["provenance"].get<std::string>()};
}

std::string format_coefficients(std::span<const double> values) {
  std::string out = "[";
  char buf[40];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.4E", values[i]);
    if (i) out += ", ";
    out += buf;
  }
  return out + "]";
}

std::string format_series_csv(const TimeSeries& series) {
  std::string out = "time_s,value\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += sig9(series.time(i));
    out += ',';
    out += sig9(series.samples()[i]);
    out += '\n';
  }
  return out;
}

std::string format_filter_csv(const TimeSeries& input, const TimeSeries& output) {
  if (input.size() != output.size()) {
    throw Error(ErrorCode::kInvalidArgument, "input and output lengths differ");
  }
  std::string out = "time_s,input,output\n";
  for (std::size_t i = 0; i < input.size(); ++i) {
    out += sig9(input.time(i));
    out += ',';
    out += sig9(input.samples()[i]);
    out += ',';
    out += sig9(output.samples()[i]);
    out += '\n';
  }
  return out;
}

TimeSeries parse_series_csv(std::string_view text) {
  const auto rows = parse_table(text, 2, "time series");
  if (rows.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "time series needs at least two samples");
  }
  const double t0 = rows.front()[0];
  const double span = rows.back()[0] - t0;
  if (!(span > 0.0)) throw Error(ErrorCode::kInvalidArgument, "time column must increase");
  const double dt = span / static_cast<double>(rows.size() - 1);
  std::vector<double> samples;
  samples.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double expected = t0 + static_cast<double>(i) * dt;
    if (std::abs(rows[i][0] - expected) > 0.01 * dt) {
      throw Error(ErrorCode::kInvalidArgument,
                  "time column is not uniformly spaced near row " + std::to_string(i + 1));
    }
    samples.push_back(rows[i][1]);
  }
  return TimeSeries(1.0 / dt, std::move(samples), t0);
}

std::string format_bode_csv(std::span<const FrequencyResponsePoint> points) {
  std::string out = "freq_hz,magnitude_db,phase_deg\n";
  for (const auto& p : points) {
    out += sig9(p.freq_hz);
    out += ',';
    out += sig9(std::max(p.magnitude_db, kMagnitudeFloorDb));
    out += ',';
    out += sig9(p.phase_deg);
    out += '\n';
  }
  return out;
}

std::vector<FrequencyResponsePoint> parse_bode_csv(std::string_view text) {
  std::vector<FrequencyResponsePoint> points;
  for (const auto& row : parse_table(text, 3, "bode")) points.push_back({row[0], row[1], row[2]});
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "bode file has no points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].freq_hz > points[i - 1].freq_hz)) {
      throw Error(ErrorCode::kInvalidArgument, "bode frequencies must be strictly increasing");
    }
  }
  return points;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path);
}

}  // namespace tustin::io
