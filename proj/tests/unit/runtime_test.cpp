#include "tustin/runtime.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "tustin/catalog.hpp"
#include "tustin/discretize.hpp"
#include "tustin/error.hpp"

using namespace tustin;

namespace {

constexpr double kPi = std::numbers::pi;

DigitalFilterCoefficients lp_third() { return {{1.0 / 3, 1.0 / 3}, {1.0 / 3}, 0.1}; }
DigitalFilterCoefficients identity(double rate = 1000.0) { return {{1.0}, {}, rate}; }

std::vector<DigitalFilterCoefficients> catalog_filters() {
  return {tustin_horner(catalog::lowpass1(2 * kPi * 10), 1000.0),
          tustin_horner(catalog::butterworth2(2 * kPi * 10), 1000.0),
          tustin_horner(catalog::notch(2 * kPi * 60, 5), 1000.0),
          tustin_horner(catalog::multiorder_example(), 1000.0),
          tustin_horner(catalog::pid(15, 2, 0.25, 0.0035), 1000.0),
          tustin_horner(catalog::leadlag(10, 2 * kPi, 20 * kPi), 1000.0)};
}

std::vector<double> run(const DigitalFilterCoefficients& c, const std::vector<double>& in,
                        StartupMode mode = StartupMode::kFillWithFirstInput) {
  FilterState f(c, mode);
  std::vector<double> out;
  for (double x : in) out.push_back(f.tick(x));
  return out;
}

}  // namespace

TEST(FilterState, Construction) {
  const FilterState f2 = make_filter(tustin_horner(catalog::butterworth2(10.0), 100.0));
  EXPECT_EQ(f2.input_history(), (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(f2.output_history(), (std::vector<double>{0, 0}));
  EXPECT_TRUE(f2.first_tick());

  const FilterState f0 = make_filter(identity());
  EXPECT_EQ(f0.input_history(), (std::vector<double>{0}));
  EXPECT_TRUE(f0.output_history().empty());

  const FilterState f1 = make_filter(lp_third());
  EXPECT_EQ(f1.input_history().size(), 2u);
  EXPECT_EQ(f1.output_history().size(), 1u);
}

TEST(FilterState, FirstTickFillsHistories) {
  FilterState f(lp_third());
  // All-5 histories: 5 (1/3 + 1/3 + 1/3).
  EXPECT_NEAR(f.tick(5.0), 5.0, 1e-14);
  EXPECT_FALSE(f.first_tick());
  // (1/3) 5 + (1/3) 8 + (1/3) 5
  EXPECT_NEAR(f.tick(8.0), 6.0, 1e-14);
  EXPECT_EQ(f.input_history(), (std::vector<double>{8.0, 5.0}));
  EXPECT_NEAR(f.output_history()[0], 6.0, 1e-14);
}

TEST(FilterState, ZeroStartupDiffersOnFirstTick) {
  FilterState f(lp_third(), StartupMode::kZero);
  EXPECT_NEAR(f.tick(5.0), 5.0 / 3.0, 1e-14);
}

TEST(FilterState, IdentityPassesThrough) {
  FilterState f(identity());
  for (double x : {1.0, -2.5, 3e7, 0.0, 4.25}) EXPECT_EQ(f.tick(x), x);
}

TEST(FilterState, RejectsNonFiniteWithoutMutating) {
  FilterState f(lp_third());
  EXPECT_THROW(f.tick(std::numeric_limits<double>::quiet_NaN()), Error);
  EXPECT_THROW(f.tick(std::numeric_limits<double>::infinity()), Error);
  EXPECT_TRUE(f.first_tick());
  EXPECT_NEAR(f.tick(5.0), 5.0, 1e-14);
}

TEST(FilterState, FlushesSubnormalInput) {
  FilterState f(identity());
  EXPECT_EQ(f.tick(std::numeric_limits<double>::denorm_min()), 0.0);
}

TEST(FilterState, ResetRestoresConstruction) {
  FilterState f(tustin_horner(catalog::butterworth2(2 * kPi * 10), 1000.0));
  const auto first = f.tick(3.0);
  f.tick(-1.0);
  f.tick(7.0);
  f.reset();
  EXPECT_TRUE(f.first_tick());
  EXPECT_EQ(f.input_history(), (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(f.tick(3.0), first);
}

TEST(Process, IdentityAndRateMismatch) {
  const TimeSeries in(1000.0, {1.0, 2.0, -3.0}, 0.5);
  const TimeSeries out = process(identity(), in);
  EXPECT_EQ(out.samples(), in.samples());
  EXPECT_EQ(out.sample_rate(), in.sample_rate());
  EXPECT_EQ(out.t0(), 0.5);
  try {
    process(lp_third(), in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRateMismatch);
  }
}

TEST(Process, ButterworthStepSettlesToUnity) {
  const auto c = tustin_horner(catalog::butterworth2(2 * kPi * 10), 1000.0);
  const TimeSeries step(1000.0, std::vector<double>(5000, 1.0));
  // Start from rest so the step is a real step, not a primed constant.
  std::vector<double> in(5000, 1.0);
  in[0] = 0.0;
  const TimeSeries out = process(c, TimeSeries(1000.0, in));
  EXPECT_NEAR(out.samples().back(), 1.0, 1e-6);
  EXPECT_NEAR(process(c, step).samples().back(), 1.0, 1e-6);
}

TEST(RuntimeProperty, HeuristicConstancyForUnityDcFilters) {
  for (const auto& c : catalog_filters()) {
    double sum = 0.0;
    for (double v : c.a_hat()) sum += v;
    for (double v : c.b_hat()) sum += v;
    if (std::abs(sum - 1.0) > 1e-9) continue;  // not unity DC gain
    FilterState f(c);
    for (int i = 0; i < 10000; ++i) ASSERT_NEAR(f.tick(5.0), 5.0, 1e-12) << "tick " << i;
  }
}

TEST(RuntimeProperty, Linearity) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> n(0.0, 1.0);
  for (const auto& c : catalog_filters()) {
    std::vector<double> u(500), v(500), w(500);
    const double alpha = 1.7, beta = -0.4;
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] = n(rng);
      v[i] = n(rng);
      w[i] = alpha * u[i] + beta * v[i];
    }
    const auto yu = run(c, u), yv = run(c, v), yw = run(c, w);
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double want = alpha * yu[i] + beta * yv[i];
      const double scale = std::abs(alpha * yu[i]) + std::abs(beta * yv[i]) + 1.0;
      EXPECT_NEAR(yw[i], want, 1e-9 * scale) << i;
    }
  }
}

TEST(RuntimeProperty, TimeInvariance) {
  std::mt19937_64 rng(22);
  std::normal_distribution<double> n(0.0, 1.0);
  for (const auto& c : catalog_filters()) {
    std::vector<double> x(400);
    for (double& v : x) v = n(rng);
    const std::size_t k = 37;
    std::vector<double> delayed(k, 0.0);
    delayed.insert(delayed.end(), x.begin(), x.end());
    const auto y = run(c, x, StartupMode::kZero);
    const auto yd = run(c, delayed, StartupMode::kZero);
    for (std::size_t i = 0; i < x.size(); ++i) {
      EXPECT_NEAR(yd[i + k], y[i], 1e-9 * (std::abs(y[i]) + 1.0)) << i;
    }
  }
}

TEST(RuntimeProperty, ZeroHistoryEquivalence) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> n(0.0, 1.0);
  for (const auto& c : catalog_filters()) {
    std::vector<double> x(300);
    for (double& v : x) v = n(rng);
    x[0] = 0.0;
    const auto a = run(c, x, StartupMode::kFillWithFirstInput);
    const auto b = run(c, x, StartupMode::kZero);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
  }
}

TEST(RuntimeProperty, RingBufferMatchesNaiveShift) {
  const auto c = tustin_horner(catalog::multiorder_example(), 1000.0);
  std::mt19937_64 rng(24);
  std::normal_distribution<double> n(0.0, 1.0);
  FilterState f(c, StartupMode::kZero);
  std::vector<double> xs(c.order() + 1, 0.0), ys(c.order(), 0.0);
  for (int i = 0; i < 200; ++i) {
    const double x0 = n(rng);
    xs.insert(xs.begin(), x0);
    xs.pop_back();
    double y0 = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) y0 += c.a_hat()[k] * xs[k];
    for (std::size_t k = 0; k < ys.size(); ++k) y0 += c.b_hat()[k] * ys[k];
    ys.insert(ys.begin(), y0);
    ys.pop_back();
    EXPECT_NEAR(f.tick(x0), y0, 1e-9 * (std::abs(y0) + 1.0));
  }
}
