#pragma once

#include "tustin/transfer_function.hpp"

namespace tustin::catalog {

/// 1 / (s / omega0 + 1). Some texts write this as 1 / ((1/tau) s + 1) with
/// tau a corner frequency in rad/s, which is the same thing.
ContinuousTransferFunction lowpass1(double omega0);

/// omega_c^2 / (s^2 + sqrt(2) omega_c s + omega_c^2)
ContinuousTransferFunction butterworth2(double omega_c);

/// (s^2 + omega_n^2) / (s^2 + (omega_n / Q) s + omega_n^2)
ContinuousTransferFunction notch(double omega_n, double q);

/// Kp + Ki / s + Kd tau s / (s + tau), expanded over s^2 + tau s.
/// The denominator keeps its zero constant term.
ContinuousTransferFunction pid(double kp, double ki, double kd, double tau);

/// K (s + zero) / (s + pole)
ContinuousTransferFunction leadlag(double gain, double zero, double pole);

/// Fixed third-order example:
///   (196.92 s^3 + 21033.79 s^2 + 427573.90 s + 18317222.93) /
///   (s^3 + 382.16 s^2 + 60851.34 s + 3875784.59)
ContinuousTransferFunction multiorder_example();

}  // namespace tustin::catalog
