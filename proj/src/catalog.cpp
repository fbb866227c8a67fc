#include "tustin/catalog.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "tustin/error.hpp"

namespace tustin::catalog {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

ContinuousTransferFunction lowpass1(double omega0) {
  require(positive(omega0), "lowpass1: omega0 must be positive");
  const std::array num{1.0};
  const std::array den{1.0 / omega0, 1.0};
  return ContinuousTransferFunction::from_descending(num, den);
}

ContinuousTransferFunction butterworth2(double omega_c) {
  require(positive(omega_c), "butterworth2: omega_c must be positive");
  const double wc2 = omega_c * omega_c;
  const std::array num{wc2};
  const std::array den{1.0, std::numbers::sqrt2 * omega_c, wc2};
  return ContinuousTransferFunction::from_descending(num, den);
}

ContinuousTransferFunction notch(double omega_n, double q) {
  require(positive(omega_n), "notch: omega_n must be positive");
  require(positive(q), "notch: Q must be positive");
  const double wn2 = omega_n * omega_n;
  const std::array num{1.0, 0.0, wn2};
  const std::array den{1.0, omega_n / q, wn2};
  return ContinuousTransferFunction::from_descending(num, den);
}

ContinuousTransferFunction pid(double kp, double ki, double kd, double tau) {
  require(positive(tau), "pid: tau must be positive");
  require(std::isfinite(kp) && std::isfinite(ki) && std::isfinite(kd), "pid: gains must be finite");
  const std::array num{kp + kd * tau, kp * tau + ki, ki * tau};
  const std::array den{1.0, tau, 0.0};
  return ContinuousTransferFunction::from_descending(num, den);
}

ContinuousTransferFunction leadlag(double gain, double zero, double pole) {
  require(gain != 0.0 && std::isfinite(gain), "leadlag: K must be finite and nonzero");
  require(std::isfinite(zero), "leadlag: zero must be finite");
  require(positive(pole), "leadlag: pole must be positive");
  const std::array num{gain, gain * zero};
  const std::array den{1.0, pole};
  return ContinuousTransferFunction::from_descending(num, den);
}

ContinuousTransferFunction multiorder_example() {
  const std::array num{196.92, 21033.79, 427573.90, 18317222.93};
  const std::array den{1.0, 382.16, 60851.34, 3875784.59};
  return ContinuousTransferFunction::from_descending(num, den);
}

}  // namespace tustin::catalog
