#pragma once

#include <complex>
#include <vector>

#include "tustin/polynomial.hpp"
#include "tustin/transfer_function.hpp"

namespace tustin {

/// A leading D[z] coefficient smaller than this fraction of the largest
/// |D[z]| coefficient is treated as zero.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// Numerator and denominator of H[z], ascending powers of z, both of order n.
struct ZDomainTransferFunction {
  Polynomial numerator;
  Polynomial denominator;
};

/// Tustin substitution s = 2 f_l (z - 1) / (z + 1) carried out as the stepwise
/// polynomial pipeline:
///
///   F(s) -> F(x)          divide by s^n, s = 2 f_l / x
///        -> F(x + 1)      taylor_shift(+1)
///        -> F(1/x + 1)    reverse_coefficients
///        -> F(2/x + 1)    scale_argument(1/2)
///        -> F(2/(x-1)+1)  taylor_shift(-1)  == F[z]
///
/// The numerator is padded to order n first. No frequency prewarping.
ZDomainTransferFunction tustin_horner_z(const ContinuousTransferFunction& tf, double loop_rate_hz);

/// Same H[z] by direct expansion:
///   F[z] = sum_k c_k (2 f_l)^(n-k) (z - 1)^(n-k) (z + 1)^k
/// with c_k the padded coefficient of s^(n-k). Independent check on the Horner path.
ZDomainTransferFunction tustin_direct_z(const ContinuousTransferFunction& tf, double loop_rate_hz);

/// Divides through by the z^n coefficient of D[z] and negates the remaining
/// denominator terms. Throws kDegenerateLeadingCoefficient.
DigitalFilterCoefficients normalize(const Polynomial& num_z, const Polynomial& den_z,
                                    double loop_rate_hz);

/// Throws kNonCausal, kNonPositiveRate, kDegenerateLeadingCoefficient.
DigitalFilterCoefficients tustin_horner(const ContinuousTransferFunction& tf, double loop_rate_hz);
DigitalFilterCoefficients tustin_direct(const ContinuousTransferFunction& tf, double loop_rate_hz);

/// Roots of z^n - b_0 z^(n-1) - ... - b_(n-1), from companion-matrix eigenvalues.
std::vector<std::complex<double>> digital_poles(const DigitalFilterCoefficients& coeffs);

}  // namespace tustin
