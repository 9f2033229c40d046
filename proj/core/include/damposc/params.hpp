#pragma once

#include <numbers>

namespace damposc {

// Physical constants of the damped oscillator, SI units.
struct OscillatorParams {
  double mass = 1.0;    // kg
  double lambda = 0.0;  // damping factor, 1/s
  double omega = 1.0;   // angular frequency, 1/s
  double hbar = 1.0;    // J s

  // Undamped period 2 pi / omega.
  [[nodiscard]] double period() const noexcept { return 2.0 * std::numbers::pi / omega; }
};

// Throws InvalidParameter unless mass, omega, hbar > 0, lambda >= 0 and all are finite.
void validate(const OscillatorParams& params);

}  // namespace damposc
