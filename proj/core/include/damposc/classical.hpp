#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "damposc/errors.hpp"
#include "damposc/params.hpp"

namespace damposc::classical {

enum class DampingRegime { underdamped, overdamped, critical };

// |lambda - omega| < kCriticalTolerance * omega classifies as critical damping.
inline constexpr double kCriticalTolerance = 1e-9;

// gamma = sqrt(lambda^2 - omega^2) taken in the complex plane.
struct ClassicalGamma {
  std::complex<double> value;
  DampingRegime regime;
};

ClassicalGamma classical_gamma(const OscillatorParams& params);

struct InitialConditions {
  double x0 = 0.0;  // m
  double v0 = 0.0;  // m/s
};

// q and its first three time derivatives.
template <class Real>
struct Jet {
  Real q{};
  Real qdot{};
  Real qddot{};
  Real qdddot{};
};

using GeneratorJet = Jet<double>;

// Four-mode solution of the generator potential,
//   q(t) = a1 e^{-(l+g)t} + a2 e^{-(l-g)t} + b1 e^{(l+g)t} + b2 e^{(l-g)t}.
// Amplitudes are ordered {a1, a2, b1, b2}; rates follow the same order.
class GeneratorTrajectory {
 public:
  using Modes = std::array<std::complex<double>, 4>;

  // Rates are derived from params; throws InvalidParameter on invalid params.
  static GeneratorTrajectory from_amplitudes(const OscillatorParams& params, const Modes& amplitudes);

  // Arbitrary rates. Used to build negative controls for the residual checks.
  static GeneratorTrajectory with_rates(const OscillatorParams& params, const Modes& amplitudes,
                                        const Modes& rates);

  [[nodiscard]] const OscillatorParams& params() const noexcept { return params_; }
  [[nodiscard]] const Modes& amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] const Modes& rates() const noexcept { return rates_; }

  // sum_k amplitude_k * rate_k^order * e^{rate_k t} * weight(rate_k), evaluated in Real precision.
  // Throws NonRealResult when the imaginary residue exceeds 1e-9 of the summed magnitudes.
  template <class Real, class Weight>
  Real mode_sum(int order, double t, Weight&& weight) const;

  // Analytic jet of q at t in the requested precision.
  template <class Real = double>
  Jet<Real> jet(double t) const;

 private:
  GeneratorTrajectory(const OscillatorParams& params, const Modes& amplitudes, const Modes& rates)
      : params_(params), amplitudes_(amplitudes), rates_(rates) {}

  OscillatorParams params_;
  Modes amplitudes_{};
  Modes rates_{};
};

// Relative imaginary residue tolerated before NonRealResult is raised.
inline constexpr double kRealResidueTolerance = 1e-9;

// Fits a1, a2 to x(0) = x0, x'(0) = v0 with b1 = b2 = 0.
// Throws DegenerateDamping for lambda == 0 or critical damping.
GeneratorTrajectory fit_physical_amplitudes(const OscillatorParams& params, const InitialConditions& ic);

GeneratorJet eval_generator_jet(const GeneratorTrajectory& traj, double t);

// x = q'' - 2 lambda q' + omega^2 q.
double reconstruct_x(const GeneratorTrajectory& traj, double t);

// d^order x / dt^order, computed mode by mode.
double coordinate_derivative(const GeneratorTrajectory& traj, int order, double t);

struct OracleSample {
  double t;
  double x;
  double v;
};

// Classic RK4 on x'' + 2 lambda x' + omega^2 x = 0. Returns samples every `sample_every` steps,
// always including t = 0 and the final step. Throws StepTooLarge when dt * omega > 0.5.
std::vector<OracleSample> integrate_x_oracle(const OscillatorParams& params, const InitialConditions& ic,
                                             double t_end, double dt, std::size_t sample_every = 1);

// Step that resolves both the oscillation and the fastest decay rate: 1e-3 * 2 pi / max(omega, lambda + |Re gamma|).
double suggested_oracle_step(const OscillatorParams& params);

// ---------------------------------------------------------------------------

template <class Real, class Weight>
Real GeneratorTrajectory::mode_sum(int order, double t, Weight&& weight) const {
  using C = std::complex<Real>;
  C total{};
  Real magnitude{};
  for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
    if (amplitudes_[k] == std::complex<double>{}) continue;
    const C rate{static_cast<Real>(rates_[k].real()), static_cast<Real>(rates_[k].imag())};
    const C amp{static_cast<Real>(amplitudes_[k].real()), static_cast<Real>(amplitudes_[k].imag())};
    C term = amp * std::exp(rate * static_cast<Real>(t)) * weight(rate);
    for (int n = 0; n < order; ++n) term *= rate;
    total += term;
    magnitude += std::abs(term);
  }
  if (std::abs(total.imag()) > static_cast<Real>(kRealResidueTolerance) * magnitude) {
    throw NonRealResult("generator mode sum has a non-negligible imaginary part");
  }
  return total.real();
}

template <class Real>
Jet<Real> GeneratorTrajectory::jet(double t) const {
  const auto unit = [](const std::complex<Real>&) { return std::complex<Real>{1}; };
  return {mode_sum<Real>(0, t, unit), mode_sum<Real>(1, t, unit), mode_sum<Real>(2, t, unit),
          mode_sum<Real>(3, t, unit)};
}

}  // namespace damposc::classical
