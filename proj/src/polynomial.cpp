#include "tustin/polynomial.hpp"

namespace tustin {

template class BasicPolynomial<double>;
template class BasicPolynomial<DoubleDouble>;

std::complex<double> evaluate(const Polynomial& p, std::complex<double> x) {
  const auto a = p.coeffs();
  std::complex<double> acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace tustin
