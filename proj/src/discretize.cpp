#include "tustin/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "tustin/error.hpp"

namespace tustin {
namespace {

void check_rate(double loop_rate_hz) {
  if (!(loop_rate_hz > 0.0) || !std::isfinite(loop_rate_hz)) {
    throw Error(ErrorCode::kNonPositiveRate, "loop rate must be positive and finite");
  }
}

// F(s) -> F(x): coefficient of x^k is c_k / (2 f_l)^k, c_k multiplying s^(n-k).
PolynomialDD substitute_reciprocal(const PolynomialDD& p_s, DoubleDouble two_fl) {
  std::vector<DoubleDouble> x = p_s.descending();
  DoubleDouble scale(1.0);
  for (DoubleDouble& c : x) {
    c /= scale;
    scale *= two_fl;
  }
  return PolynomialDD(std::move(x));
}

PolynomialDD horner_pipeline(const Polynomial& p_s, double two_fl) {
  PolynomialDD p = substitute_reciprocal(widen(p_s), two_fl);
  p = taylor_shift(p, 1.0);
  p = reverse_coefficients(p);
  p = scale_argument(p, 0.5);
  return taylor_shift(p, -1.0);
}

PolynomialDD direct_expansion(const Polynomial& p_s, double two_fl) {
  const std::size_t n = p_s.declared_order();
  const PolynomialDD z_minus_1({-1.0, 1.0});
  const PolynomialDD z_plus_1({1.0, 1.0});
  PolynomialDD acc(std::vector<DoubleDouble>{}, n);
  DoubleDouble fl_power(1.0);
  for (std::size_t j = 0; j <= n; ++j) {  // power of s
    const std::size_t k = n - j;
    const DoubleDouble c = DoubleDouble(p_s[j]) * fl_power;
    fl_power *= two_fl;
    PolynomialDD term = multiply(power(z_minus_1, static_cast<unsigned>(j)),
                                 power(z_plus_1, static_cast<unsigned>(k)));
    std::vector<DoubleDouble> scaled(term.coeffs().begin(), term.coeffs().end());
    for (DoubleDouble& v : scaled) v *= c;
    acc = add(acc, PolynomialDD(std::move(scaled)));
  }
  return acc;
}

struct ZDomainDD {
  PolynomialDD numerator;
  PolynomialDD denominator;
};

ZDomainDD horner_z(const ContinuousTransferFunction& tf, double loop_rate_hz) {
  check_rate(loop_rate_hz);
  const std::size_t n = tf.order();
  const double two_fl = 2.0 * loop_rate_hz;
  return {horner_pipeline(tf.numerator().padded_to(n), two_fl),
          horner_pipeline(tf.denominator(), two_fl)};
}

ZDomainDD direct_z(const ContinuousTransferFunction& tf, double loop_rate_hz) {
  check_rate(loop_rate_hz);
  const std::size_t n = tf.order();
  if (n > kMaxPolynomialPower) {
    throw Error(ErrorCode::kInvalidArgument, "transfer function order too large");
  }
  const double two_fl = 2.0 * loop_rate_hz;
  return {direct_expansion(tf.numerator().padded_to(n), two_fl),
          direct_expansion(tf.denominator(), two_fl)};
}

template <class T>
DigitalFilterCoefficients normalize_impl(const BasicPolynomial<T>& num_z,
                                         const BasicPolynomial<T>& den_z, double loop_rate_hz) {
  using std::abs;
  const std::size_t n = den_z.declared_order();
  if (num_z.declared_order() > n) {
    throw Error(ErrorCode::kNonCausal, "numerator order exceeds denominator order");
  }
  const BasicPolynomial<T> num = num_z.padded_to(n);
  T largest(0.0);
  for (const T& c : den_z.coeffs()) largest = std::max(largest, abs(c));
  const T lead = den_z[n];
  if (abs(lead) < T(kDegeneracyThreshold) * largest || lead == T(0.0)) {
    throw Error(ErrorCode::kDegenerateLeadingCoefficient,
                "leading z^" + std::to_string(n) +
                    " denominator coefficient vanishes; the continuous denominator has a root "
                    "at s = 2 f_l");
  }
  std::vector<double> a_hat(n + 1);
  std::vector<double> b_hat(n);
  for (std::size_t k = 0; k <= n; ++k) a_hat[k] = to_double(num[n - k] / lead);
  for (std::size_t k = 0; k < n; ++k) b_hat[k] = to_double(-den_z[n - 1 - k] / lead);
  return {std::move(a_hat), std::move(b_hat), loop_rate_hz};
}

}  // namespace

ZDomainTransferFunction tustin_horner_z(const ContinuousTransferFunction& tf,
                                        double loop_rate_hz) {
  const auto z = horner_z(tf, loop_rate_hz);
  return {round_to_double(z.numerator), round_to_double(z.denominator)};
}

ZDomainTransferFunction tustin_direct_z(const ContinuousTransferFunction& tf,
                                        double loop_rate_hz) {
  const auto z = direct_z(tf, loop_rate_hz);
  return {round_to_double(z.numerator), round_to_double(z.denominator)};
}

DigitalFilterCoefficients normalize(const Polynomial& num_z, const Polynomial& den_z,
                                    double loop_rate_hz) {
  return normalize_impl(num_z, den_z, loop_rate_hz);
}

DigitalFilterCoefficients tustin_horner(const ContinuousTransferFunction& tf,
                                        double loop_rate_hz) {
  const auto z = horner_z(tf, loop_rate_hz);
  return normalize_impl(z.numerator, z.denominator, loop_rate_hz);
}

DigitalFilterCoefficients tustin_direct(const ContinuousTransferFunction& tf,
                                        double loop_rate_hz) {
  const auto z = direct_z(tf, loop_rate_hz);
  return normalize_impl(z.numerator, z.denominator, loop_rate_hz);
}

std::vector<std::complex<double>> digital_poles(const DigitalFilterCoefficients& coeffs) {
  const auto n = static_cast<Eigen::Index>(coeffs.order());
  if (n == 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) companion(0, k) = coeffs.b_hat()[k];
  for (Eigen::Index k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  const auto& values = solver.eigenvalues();
  std::vector<std::complex<double>> poles(values.data(), values.data() + n);
  std::sort(poles.begin(), poles.end(), [](auto a, auto b) { return std::abs(a) > std::abs(b); });
  return poles;
}

}  // namespace tustin
