// Test-only reference computations, kept independent of the library paths
// they check.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tustin/transfer_function.hpp"

namespace tustin::oracle {

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// p(x + c) by binomial expansion, ascending coefficients.
inline std::vector<double> binomial_shift(const std::vector<double>& p, double c) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<double> q(p.size(), 0.0);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= j; ++k) q[k] += p[j] * binomial(j, k) * std::pow(c, j - k);
  }
  return q;
}

inline bool close_rel(double a, double b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs_floor;
}

/// Random causal TF: order n in [0, max_order], numerator order m <= n,
/// coefficients log-uniform in [1e-3, 1e3] with random signs, a_0 = 1.
inline ContinuousTransferFunction random_causal_tf(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> order(0, max_order);
  std::uniform_real_distribution<double> log_mag(-3.0, 3.0);
  std::bernoulli_distribution negative(0.5);
  auto coeff = [&] {
    const double v = std::pow(10.0, log_mag(rng));
    return negative(rng) ? -v : v;
  };
  const int n = order(rng);
  const int m = std::uniform_int_distribution<int>(0, n)(rng);
  std::vector<double> den{1.0};
  for (int i = 0; i < n; ++i) den.push_back(coeff());
  std::vector<double> num;
  for (int i = 0; i <= m; ++i) num.push_back(coeff());
  return ContinuousTransferFunction::from_descending(num, den);
}

/// Log-uniform loop rate in [1, 1e4] Hz.
inline double random_rate(std::mt19937_64& rng) {
  return std::pow(10.0, std::uniform_real_distribution<double>(0.0, 4.0)(rng));
}

}  // namespace tustin::oracle
