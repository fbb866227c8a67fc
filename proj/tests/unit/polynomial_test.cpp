#include "tustin/polynomial.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tustin/error.hpp"

using tustin::Polynomial;

namespace {

Polynomial desc(std::initializer_list<double> d) {
  const std::vector<double> v(d);
  return Polynomial::from_descending(v);
}

void expect_coeffs(const Polynomial& p, std::initializer_list<double> descending, double tol = 1e-12) {
  const std::vector<double> want(descending);
  ASSERT_EQ(p.descending().size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(p.descending()[i], want[i], tol) << i;
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t max_order = 8) {
  std::uniform_int_distribution<std::size_t> order(0, max_order);
  std::uniform_real_distribution<double> coeff(-10.0, 10.0);
  std::vector<double> a(order(rng) + 1);
  for (double& c : a) c = coeff(rng);
  return Polynomial(a);
}

void expect_rel_equal(const Polynomial& a, const Polynomial& b, double rel) {
  ASSERT_EQ(a.declared_order(), b.declared_order());
  double scale = 0.0;
  for (double c : a.coeffs()) scale = std::max(scale, std::abs(c));
  for (std::size_t k = 0; k <= a.declared_order(); ++k) {
    EXPECT_NEAR(a[k], b[k], rel * scale) << "power " << k;
  }
}

}  // namespace

TEST(Polynomial, PadsToDeclaredOrder) {
  Polynomial p({0.5}, 2);
  EXPECT_EQ(p.declared_order(), 2u);
  expect_coeffs(p, {0.0, 0.0, 0.5});
  EXPECT_THROW(Polynomial({1.0, 2.0, 3.0}, 1), tustin::Error);
}

TEST(Polynomial, TaylorShiftWorkedSteps) {
  expect_coeffs(taylor_shift(desc({5, 0}), 1.0), {5, 5});
  expect_coeffs(taylor_shift(desc({5, 10}), 1.0), {5, 15});
  expect_coeffs(taylor_shift(desc({2.5, 5}), -1.0), {2.5, 2.5});
  expect_coeffs(taylor_shift(desc({7.5, 5}), -1.0), {7.5, -2.5});
  expect_coeffs(taylor_shift(desc({0.5, 1, 1}), 1.0), {0.5, 2, 2.5});
  expect_coeffs(taylor_shift(desc({0.5, 0, 0}), 1.0), {0.5, 1, 0.5});
  expect_coeffs(taylor_shift(desc({0.125, 0.5, 0.5}), -1.0), {0.125, 0.25, 0.125});
  expect_coeffs(taylor_shift(desc({0.625, 1, 0.5}), -1.0), {0.625, -0.25, 0.125});
}

TEST(Polynomial, TaylorShiftOfConstant) {
  expect_coeffs(taylor_shift(desc({3.25}), 17.0), {3.25});
  expect_coeffs(taylor_shift(desc({3.25}), -2.0), {3.25});
}

TEST(Polynomial, TaylorShiftMatchesBinomialOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng);
    const double c = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    const std::vector<double> want =
        tustin::oracle::binomial_shift({p.coeffs().begin(), p.coeffs().end()}, c);
    expect_rel_equal(taylor_shift(p, c), Polynomial(want), 1e-10);
  }
}

TEST(Polynomial, ReverseOverPaddedLength) {
  expect_coeffs(reverse_coefficients(desc({5, 15})), {15, 5});
  expect_coeffs(reverse_coefficients(desc({0.5, 2, 2.5})), {2.5, 2, 0.5});
  expect_coeffs(reverse_coefficients(desc({0.5, 1, 0.5})), {0.5, 1, 0.5});
  // 0.5 padded to order 2 flips to 0.5 x^2, not to itself.
  expect_coeffs(reverse_coefficients(Polynomial({0.5}, 2)), {0.5, 0, 0});
}

TEST(Polynomial, ScaleArgument) {
  expect_coeffs(scale_argument(desc({15, 5}), 0.5), {7.5, 5});
  expect_coeffs(scale_argument(desc({2.5, 2, 0.5}), 0.5), {0.625, 1, 0.5});
  expect_coeffs(scale_argument(desc({0.5, 1, 0.5}), 0.5), {0.125, 0.5, 0.5});
  const Polynomial p = desc({1, -2, 3, -4});
  EXPECT_EQ(scale_argument(p, 1.0), p);
  EXPECT_THROW(scale_argument(p, 0.0), tustin::Error);
  EXPECT_THROW(scale_argument(p, NAN), tustin::Error);
}

TEST(Polynomial, RingOperations) {
  expect_coeffs(multiply(desc({1, -1}), desc({1, 1})), {1, 0, -1});
  expect_coeffs(power(desc({1, 1}), 2), {1, 2, 1});
  expect_coeffs(power(desc({4, 2, 9}), 0), {1});
  expect_coeffs(add(desc({1, 2, 3}), desc({4, 5})), {1, 6, 8});
  EXPECT_NO_THROW(power(desc({1, 1}), 64));
  EXPECT_THROW(power(desc({1, 1}), 65), tustin::Error);
}

TEST(Polynomial, EvaluateComplex) {
  using C = std::complex<double>;
  EXPECT_EQ(evaluate(desc({10, 1}), C(0.0, 0.0)), C(1.0, 0.0));
  // (j sqrt2)^2 + 2 j sqrt2 + 2 = -2 + 2 j sqrt2 + 2
  const C v = evaluate(desc({1, 2, 2}), C(0.0, std::sqrt(2.0)));
  EXPECT_NEAR(v.real(), 0.0, 1e-14);
  EXPECT_NEAR(v.imag(), 2.0 * std::sqrt(2.0), 1e-14);
  const double wn = 2.0 * M_PI * 60.0;
  EXPECT_EQ(evaluate(desc({1, 0, wn * wn}), C(0.0, wn)), C(0.0, 0.0));
}

TEST(PolynomialProperty, ShiftRoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = random_poly(rng);
    const double c = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    expect_rel_equal(taylor_shift(taylor_shift(p, c), -c), p, 1e-12);
  }
}

TEST(PolynomialProperty, ReverseIsInvolution) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng);
    EXPECT_EQ(reverse_coefficients(reverse_coefficients(p)), p);
  }
}

TEST(PolynomialProperty, ScaleRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = random_poly(rng);
    const double c = std::pow(2.0, std::uniform_real_distribution<double>(-2.0, 2.0)(rng));
    const Polynomial q = scale_argument(scale_argument(p, c), 1.0 / c);
    for (std::size_t k = 0; k <= p.declared_order(); ++k) {
      EXPECT_TRUE(tustin::oracle::close_rel(q[k], p[k], 1e-12)) << q[k] << " vs " << p[k];
    }
  }
}

TEST(PolynomialProperty, ShiftCommutesWithEvaluation) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = random_poly(rng);
    const double c = u(rng);
    std::complex<double> x(u(rng), u(rng));
    if (std::abs(x) > 1.0) x /= std::abs(x);
    const auto lhs = evaluate(taylor_shift(p, c), x);
    const auto rhs = evaluate(p, x + c);
    double scale = 0.0;  // sum |p_k| |x + c|^k bounds the rounding
    for (std::size_t k = 0; k <= p.declared_order(); ++k) {
      scale += std::abs(p[k]) * std::pow(std::abs(x + c) + 1.0, static_cast<double>(k));
    }
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(std::abs(rhs), 1e-3 * scale));
  }
}

TEST(PolynomialProperty, RingAxioms) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, 5);
    const Polynomial q = random_poly(rng, 5);
    const Polynomial r = random_poly(rng, 5);
    const Polynomial pq = multiply(p, q);
    const Polynomial qp = multiply(q, p);
    expect_rel_equal(pq, qp, 1e-12);
    const Polynomial lhs = multiply(p, add(q, r));
    const Polynomial rhs = add(multiply(p, q), multiply(p, r));
    const std::size_t n = std::max(lhs.declared_order(), rhs.declared_order());
    expect_rel_equal(lhs.padded_to(n), rhs.padded_to(n), 1e-12);
  }
}
