#include "damposc/classical.hpp"

#include <algorithm>
#include <cmath>

#include "damposc/errors.hpp"

namespace damposc::classical {

ClassicalGamma classical_gamma(const OscillatorParams& params) {
  validate(params);
  const double lam = params.lambda;
  const double w = params.omega;
  // Factored form keeps the difference of squares accurate near the critical point.
  const double product = (lam - w) * (lam + w);
  ClassicalGamma gamma{};
  if (product >= 0.0) {
    gamma.value = {std::sqrt(product), 0.0};
  } else {
    gamma.value = {0.0, std::sqrt(-product)};
  }
  if (std::abs(lam - w) < kCriticalTolerance * w) {
    gamma.regime = DampingRegime::critical;
  } else {
    gamma.regime = lam < w ? DampingRegime::underdamped : DampingRegime::overdamped;
  }
  return gamma;
}

GeneratorTrajectory GeneratorTrajectory::from_amplitudes(const OscillatorParams& params, const Modes& amplitudes) {
  const std::complex<double> gamma = classical_gamma(params).value;
  const double lam = params.lambda;
  const Modes rates{-(lam + gamma), -(lam - gamma), lam + gamma, lam - gamma};
  return GeneratorTrajectory(params, amplitudes, rates);
}

GeneratorTrajectory GeneratorTrajectory::with_rates(const OscillatorParams& params, const Modes& amplitudes,
                                                    const Modes& rates) {
  validate(params);
  return GeneratorTrajectory(params, amplitudes, rates);
}

GeneratorTrajectory fit_physical_amplitudes(const OscillatorParams& params, const InitialConditions& ic) {
  const ClassicalGamma gamma = classical_gamma(params);
  if (params.lambda == 0.0) {
    throw DegenerateDamping("closed-form generator amplitudes divide by lambda; lambda = 0 is singular");
  }
  if (gamma.regime == DampingRegime::critical) {
    throw DegenerateDamping("closed-form generator amplitudes divide by gamma; critical damping is singular");
  }
  const std::complex<double> g = gamma.value;
  const double lam = params.lambda;
  const std::complex<double> a1 = ((g - lam) * ic.x0 - ic.v0) / (8.0 * g * lam * (lam + g));
  const std::complex<double> a2 = ((g + lam) * ic.x0 + ic.v0) / (8.0 * g * lam * (lam - g));
  return GeneratorTrajectory::from_amplitudes(params, {a1, a2, 0.0, 0.0});
}

GeneratorJet eval_generator_jet(const GeneratorTrajectory& traj, double t) { return traj.jet<double>(t); }

double coordinate_derivative(const GeneratorTrajectory& traj, int order, double t) {
  const double lam = traj.params().lambda;
  const double w2 = traj.params().omega * traj.params().omega;
  return traj.mode_sum<double>(order, t, [&](const std::complex<double>& r) { return r * r - 2.0 * lam * r + w2; });
}

double reconstruct_x(const GeneratorTrajectory& traj, double t) { return coordinate_derivative(traj, 0, t); }

std::vector<OracleSample> integrate_x_oracle(const OscillatorParams& params, const InitialConditions& ic,
                                             double t_end, double dt, std::size_t sample_every) {
  validate(params);
  if (!(dt > 0.0) || !(t_end > 0.0)) throw InvalidParameter("dt and t_end must be positive");
  if (dt * params.omega > 0.5) throw StepTooLarge("dt * omega must not exceed 0.5");
  if (sample_every == 0) throw InvalidParameter("sample_every must be at least 1");

  // Uniform steps that land exactly on t_end.
  const auto n_steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  const double h = t_end / static_cast<double>(n_steps);
  const double two_lam = 2.0 * params.lambda;
  const double w2 = params.omega * params.omega;
  const auto accel = [&](double x, double v) { return -two_lam * v - w2 * x; };

  std::vector<OracleSample> out;
  out.reserve(n_steps / sample_every + 2);
  double x = ic.x0;
  double v = ic.v0;
  out.push_back({0.0, x, v});
  for (std::size_t k = 1; k <= n_steps; ++k) {
    const double k1x = v;
    const double k1v = accel(x, v);
    const double k2x = v + 0.5 * h * k1v;
    const double k2v = accel(x + 0.5 * h * k1x, v + 0.5 * h * k1v);
    const double k3x = v + 0.5 * h * k2v;
    const double k3v = accel(x + 0.5 * h * k2x, v + 0.5 * h * k2v);
    const double k4x = v + h * k3v;
    const double k4v = accel(x + h * k3x, v + h * k3v);
    x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (k % sample_every == 0 || k == n_steps) out.push_back({static_cast<double>(k) * h, x, v});
  }
  return out;
}

double suggested_oracle_step(const OscillatorParams& params) {
  const ClassicalGamma gamma = classical_gamma(params);
  const double fastest = std::max(params.omega, params.lambda + std::abs(gamma.value.real()));
  return 1e-3 * 2.0 * std::numbers::pi / fastest;
}

}  // namespace damposc::classical
