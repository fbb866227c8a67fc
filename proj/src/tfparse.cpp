#include "tustin/tfparse.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "tustin/error.hpp"

namespace tustin {
namespace {

std::string describe(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return "end of input";
  const unsigned char c = static_cast<unsigned char>(text[pos]);
  if (std::isprint(c)) return std::string("'") + text[pos] + "'";
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("byte 0x") + kHex[c >> 4] + kHex[c & 0xf];
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the decimal literal starting at pos (0 if none).
std::size_t scan_number(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  std::size_t digits = 0;
  while (i < text.size() && is_digit(text[i])) ++i, ++digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && is_digit(text[i])) ++i, ++digits;
  }
  if (digits == 0) return 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
    if (j < text.size() && is_digit(text[j])) {
      while (j < text.size() && is_digit(text[j])) ++j;
      i = j;
    }
  }
  return i - pos;
}

double to_double(std::string_view text, std::size_t pos, std::size_t len) {
  double value = 0.0;
  const char* first = text.data() + pos;
  const auto [ptr, ec] = std::from_chars(first, first + len, value);
  if (ec != std::errc() || ptr != first + len) {
    throw TfSyntaxError(pos, "finite number", "'" + std::string(text.substr(pos, len)) + "'");
  }
  return value;
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  ContinuousTransferFunction parse() {
    std::vector<double> num = parse_group(0);
    std::vector<double> den{1.0};
    skip_space();
    if (peek() == '/') {
      ++pos_;
      den = parse_group(0);
      skip_space();
      if (peek() == '/') fail("end of input (nested division is not supported)");
    }
    skip_space();
    if (pos_ != text_.size()) fail("'/' or end of input");
    return {Polynomial(std::move(num)), Polynomial(std::move(den))};
  }

 private:
  static constexpr int kMaxDepth = 64;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw TfSyntaxError(pos_, expected, describe(text_, pos_));
  }

  // Ascending coefficients, sized to the highest power written.
  std::vector<double> parse_group(int depth) {
    if (depth > kMaxDepth) fail("shallower parenthesis nesting");
    skip_space();
    if (peek() == '(') {
      ++pos_;
      std::vector<double> inner = parse_group(depth + 1);
      skip_space();
      if (peek() != ')') fail("')'");
      ++pos_;
      return inner;
    }
    return parse_poly();
  }

  std::vector<double> parse_poly() {
    std::array<double, kMaxParsedPower + 1> acc{};
    std::array<bool, kMaxParsedPower + 1> seen{};
    std::size_t highest = 0;
    auto add_term = [&](double coeff, unsigned power) {
      // Assign the first occurrence so a lone -0 survives a round trip.
      acc[power] = seen[power] ? acc[power] + coeff : coeff;
      seen[power] = true;
      highest = std::max<std::size_t>(highest, power);
    };
    double sign = 1.0;
    for (;;) {
      auto [coeff, power] = parse_term();
      add_term(sign * coeff, power);
      skip_space();
      if (peek() == '+') {
        sign = 1.0;
      } else if (peek() == '-') {
        sign = -1.0;
      } else {
        break;
      }
      ++pos_;
    }
    return {acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(highest) + 1};
  }

  std::pair<double, unsigned> parse_term() {
    skip_space();
    double coeff = 1.0;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') coeff = -1.0;
      ++pos_;
      skip_space();
    }
    bool have_number = false;
    if (const std::size_t len = scan_number(text_, pos_); len > 0) {
      coeff *= to_double(text_, pos_, len);
      pos_ += len;
      have_number = true;
      skip_space();
    }
    bool star = false;
    if (have_number && peek() == '*') {
      star = true;
      ++pos_;
      skip_space();
    }
    if (peek() != 's') {
      if (star) fail("'s'");
      if (!have_number) fail("number or 's'");
      return {coeff, 0};
    }
    ++pos_;
    unsigned power = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      if (!is_digit(peek())) fail("unsigned integer power");
      unsigned long value = 0;
      while (is_digit(peek())) {
        value = value * 10 + static_cast<unsigned long>(peek() - '0');
        ++pos_;
        if (value > kMaxParsedPower) {
          throw TfSyntaxError(start, "power <= " + std::to_string(kMaxParsedPower),
                              "'" + std::string(text_.substr(start, pos_ - start)) + "...'");
        }
      }
      power = static_cast<unsigned>(value);
    }
    return {coeff, power};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  auto is_separator = [](char c) { return c == ',' || is_space(c); };
  bool expect_value = true;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] == ',') {
      if (expect_value) throw TfSyntaxError(pos, "coefficient", "','");
      expect_value = true;
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_separator(text[end])) ++end;
    std::size_t start = pos;
    if (text[start] == '+' || text[start] == '-') ++start;
    const std::size_t len = scan_number(text, start);
    if (len == 0 || start + len != end) {
      throw TfSyntaxError(pos, "decimal coefficient",
                          "'" + std::string(text.substr(pos, end - pos)) + "'");
    }
    double v = to_double(text, start, len);
    if (text[pos] == '-') v = -v;
    values.push_back(v);
    expect_value = false;
    pos = end;
  }
  if (values.empty()) throw TfSyntaxError(text.size(), "coefficient", "end of input");
  if (expect_value) throw TfSyntaxError(text.size(), "coefficient after ','", "end of input");
  return values;
}

std::string shortest(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_poly_text(const Polynomial& p) {
  std::string out;
  const std::size_t n = p.declared_order();
  for (std::size_t k = n + 1; k-- > 0;) {
    if (k != n) out += " + ";
    out += shortest(p[k]);
    if (k >= 1) out += "*s";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

ContinuousTransferFunction parse_coeff_lists(std::string_view numerator,
                                             std::string_view denominator) {
  const std::vector<double> num = parse_list(numerator);
  const std::vector<double> den = parse_list(denominator);
  return ContinuousTransferFunction::from_descending(num, den);
}

ContinuousTransferFunction parse_expression(std::string_view text) {
  return ExpressionParser(text).parse();
}

std::string format_expression(const ContinuousTransferFunction& tf) {
  return "(" + format_poly_text(tf.numerator()) + ")/(" + format_poly_text(tf.denominator()) + ")";
}

std::string format_polynomial(const Polynomial& p) {
  std::string out = "[";
  const auto desc = p.descending();
  for (std::size_t i = 0; i < desc.size(); ++i) {
    if (i) out += ", ";
    out += shortest(desc[i]);
  }
  return out + "]";
}

}  // namespace tustin
