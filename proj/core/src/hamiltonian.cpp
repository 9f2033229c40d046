#include "damposc/hamiltonian.hpp"

namespace damposc::hamiltonian {

CanonicalState canonical_from_jet(const OscillatorParams& params, const GeneratorJet& jet) {
  const double lam = params.lambda;
  const double w2 = params.omega * params.omega;
  CanonicalState s;
  s.q1 = jet.q;
  s.q2 = jet.qdot;
  s.p1 = 4.0 * lam * lam * jet.qdot - jet.qdddot - w2 * jet.qdot - 2.0 * lam * w2 * jet.q;
  s.p2 = jet.qddot - 2.0 * lam * jet.qdot + w2 * jet.q;
  return s;
}

ScaledCanonicalState scale_canonical(const OscillatorParams& params, const CanonicalState& state) {
  const double w = params.omega;
  const double mw = params.mass * params.omega;
  return {w * state.q1, w * state.q2, mw * state.p1, mw * state.p2};
}

CanonicalState unscale_canonical(const OscillatorParams& params, const ScaledCanonicalState& state) {
  const double w = params.omega;
  const double mw = params.mass * params.omega;
  return {state.q1 / w, state.q2 / w, state.p1 / mw, state.p2 / mw};
}

double hamiltonian_canonical(const CanonicalState& s, const OscillatorParams& params) {
  const double w2 = params.omega * params.omega;
  return 0.5 * s.p2 * s.p2 - w2 * s.p2 * s.q1 + s.p1 * s.q2 + 2.0 * params.lambda * s.p2 * s.q2;
}

double hamiltonian_scaled(const ScaledCanonicalState& s, const OscillatorParams& params) {
  const double w2 = params.omega * params.omega;
  return s.p2 * s.p2 / (2.0 * params.mass) - w2 * s.p2 * s.q1 + s.p1 * s.q2 + 2.0 * params.lambda * s.p2 * s.q2;
}

double hamiltonian_on_trajectory(const GeneratorTrajectory& traj, double t) {
  const Jet<long double> jet = traj.jet<long double>(t);
  return static_cast<double>(hamiltonian_potential_form(traj.params(), jet));
}

double euler_lagrange_residual(const OscillatorParams& params, const GeneratorTrajectory& traj, double t) {
  const double lam = params.lambda;
  const double w2 = params.omega * params.omega;
  std::complex<double> total{};
  for (std::size_t k = 0; k < traj.amplitudes().size(); ++k) {
    const std::complex<double> r = traj.rates()[k];
    const std::complex<double> r2 = r * r;
    const std::complex<double> characteristic = (r2 + 2.0 * lam * r + w2) * (r2 - 2.0 * lam * r + w2);
    total += traj.amplitudes()[k] * characteristic * std::exp(r * t);
  }
  return total.real();
}

}  // namespace damposc::hamiltonian
