#pragma once

#include <string>
#include <string_view>

#include "tustin/transfer_function.hpp"

namespace tustin {

/// Comma- or whitespace-separated decimal literals in descending powers of s.
/// Throws TfSyntaxError (empty list, bad token) or kNonCausal.
ContinuousTransferFunction parse_coeff_lists(std::string_view numerator,
                                             std::string_view denominator);

/// Rational expression in s:
///
///   expr  := group ( "/" group )?
///   group := "(" group ")" | poly
///   poly  := term ( ("+" | "-") term )*
///   term  := ("+" | "-")? number? ( "*"? "s" ( "^" uint )? )?
///
/// A term needs a number, an "s", or both; "10s" is implicit multiplication.
/// Powers are limited to 32 and only one top-level "/" is allowed. The
/// polynomial order is the highest power written, zero coefficients included.
/// Throws TfSyntaxError, kNonCausal, or kInvalidArgument (zero leading
/// denominator coefficient).
ContinuousTransferFunction parse_expression(std::string_view text);

inline constexpr unsigned kMaxParsedPower = 32;

/// Canonical text, e.g. "(1)/(10*s + 1)". Coefficients use the shortest
/// round-trip representation, so parse_expression(format_expression(tf)) == tf.
std::string format_expression(const ContinuousTransferFunction& tf);

/// "[1, 10]" style descending coefficient list for messages.
std::string format_polynomial(const Polynomial& p);

}  // namespace tustin
