#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "tustin/double_double.hpp"
#include "tustin/error.hpp"

namespace tustin {

/// Dense real polynomial with coefficients stored in ascending power order
/// (coeffs()[k] multiplies x^k).
///
/// The declared order is authoritative: the coefficient vector always has
/// exactly declared_order() + 1 entries, and zero high-order coefficients are
/// never trimmed. This lets a low-degree numerator be carried through the
/// discretization pipeline as a degree-n object.
///
/// T is double or DoubleDouble.
template <class T>
class BasicPolynomial {
 public:
  /// The zero constant.
  BasicPolynomial() : coeffs_{T(0.0)} {}

  /// Declared order is ascending.size() - 1. An empty vector yields the zero constant.
  explicit BasicPolynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.empty()) coeffs_.push_back(T(0.0));
  }

  /// Zero-pads `ascending` up to `declared_order`. Throws kInvalidArgument if
  /// `ascending` has more than declared_order + 1 entries.
  BasicPolynomial(std::vector<T> ascending, std::size_t declared_order)
      : coeffs_(std::move(ascending)) {
    if (coeffs_.size() > declared_order + 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "polynomial has " + std::to_string(coeffs_.size()) +
                      " coefficients but declared order " + std::to_string(declared_order));
    }
    coeffs_.resize(declared_order + 1, T(0.0));
  }

  /// Builds from descending-power coefficients, as usually written.
  static BasicPolynomial from_descending(std::span<const T> descending) {
    return BasicPolynomial(std::vector<T>(descending.rbegin(), descending.rend()));
  }

  std::size_t declared_order() const noexcept { return coeffs_.size() - 1; }
  std::span<const T> coeffs() const noexcept { return coeffs_; }
  T operator[](std::size_t power) const { return coeffs_.at(power); }

  std::vector<T> descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

  /// Same polynomial with extra zero high-order coefficients.
  BasicPolynomial padded_to(std::size_t order) const {
    if (order < declared_order()) {
      throw Error(ErrorCode::kInvalidArgument, "cannot pad polynomial to a lower order");
    }
    return BasicPolynomial(coeffs_, order);
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  std::vector<T> coeffs_;
};

using Polynomial = BasicPolynomial<double>;
using PolynomialDD = BasicPolynomial<DoubleDouble>;

/// Widens to double-double without rounding.
inline PolynomialDD widen(const Polynomial& p) {
  return PolynomialDD(std::vector<DoubleDouble>(p.coeffs().begin(), p.coeffs().end()));
}

/// Rounds each coefficient to the nearest double.
inline Polynomial round_to_double(const PolynomialDD& p) {
  std::vector<double> a;
  a.reserve(p.coeffs().size());
  for (const DoubleDouble& c : p.coeffs()) a.push_back(c.to_double());
  return Polynomial(std::move(a));
}

/// q(x) = p(x + c), by declared_order passes of synthetic division.
template <class T>
BasicPolynomial<T> taylor_shift(const BasicPolynomial<T>& p, std::type_identity_t<T> c) {
  std::vector<T> a(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = p.declared_order();
  // Pass i is one synthetic division by (x - c); its remainder lands in a[i].
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) {
      a[j] += c * a[j + 1];
    }
  }
  return BasicPolynomial<T>(std::move(a));
}

/// q(x) = x^declared_order * p(1/x); reverses over the full padded length.
template <class T>
BasicPolynomial<T> reverse_coefficients(const BasicPolynomial<T>& p) {
  return BasicPolynomial<T>(p.descending());
}

/// q(x) = p(c * x). Throws kInvalidArgument for c == 0 or non-finite c.
template <class T>
BasicPolynomial<T> scale_argument(const BasicPolynomial<T>& p, std::type_identity_t<T> c) {
  using std::isfinite;
  if (c == T(0.0) || !isfinite(c)) {
    throw Error(ErrorCode::kInvalidArgument, "argument scale must be finite and nonzero");
  }
  std::vector<T> a(p.coeffs().begin(), p.coeffs().end());
  T ck(1.0);
  for (T& coeff : a) {
    coeff *= ck;
    ck *= c;
  }
  return BasicPolynomial<T>(std::move(a));
}

template <class T>
BasicPolynomial<T> add(const BasicPolynomial<T>& p, const BasicPolynomial<T>& q) {
  const std::size_t order = std::max(p.declared_order(), q.declared_order());
  std::vector<T> a(order + 1, T(0.0));
  for (std::size_t k = 0; k <= p.declared_order(); ++k) a[k] += p[k];
  for (std::size_t k = 0; k <= q.declared_order(); ++k) a[k] += q[k];
  return BasicPolynomial<T>(std::move(a));
}

template <class T>
BasicPolynomial<T> multiply(const BasicPolynomial<T>& p, const BasicPolynomial<T>& q) {
  std::vector<T> a(p.declared_order() + q.declared_order() + 1, T(0.0));
  for (std::size_t i = 0; i <= p.declared_order(); ++i) {
    for (std::size_t j = 0; j <= q.declared_order(); ++j) {
      a[i + j] += p[i] * q[j];
    }
  }
  return BasicPolynomial<T>(std::move(a));
}

inline constexpr unsigned kMaxPolynomialPower = 64;

/// p^k with k <= kMaxPolynomialPower; p^0 is the constant 1.
template <class T>
BasicPolynomial<T> power(const BasicPolynomial<T>& p, unsigned k) {
  if (k > kMaxPolynomialPower) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomial power " + std::to_string(k) + " exceeds limit " +
                    std::to_string(kMaxPolynomialPower));
  }
  BasicPolynomial<T> result(std::vector<T>{T(1.0)});
  for (unsigned i = 0; i < k; ++i) result = multiply(result, p);
  return result;
}

/// Nested (Horner) evaluation.
template <class T>
T evaluate(const BasicPolynomial<T>& p, std::type_identity_t<T> x) {
  const auto a = p.coeffs();
  T acc(0.0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> evaluate(const Polynomial& p, std::complex<double> x);

}  // namespace tustin
