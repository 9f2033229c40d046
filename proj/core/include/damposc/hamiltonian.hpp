#pragma once

#include "damposc/classical.hpp"
#include "damposc/params.hpp"

namespace damposc::hamiltonian {

using classical::GeneratorJet;
using classical::GeneratorTrajectory;
using classical::Jet;

// Ostrogradsky pairs of the squared Lagrangian: q1 = q, q2 = q', with conjugate momenta p1, p2.
struct CanonicalState {
  double q1 = 0.0;
  double q2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

// Unit-restored pairs: q -> omega q, p -> m omega p.
// q1 in m s, q2 in m, p1 in kg m / s^2, p2 in kg m / s.
struct ScaledCanonicalState {
  double q1 = 0.0;
  double q2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

CanonicalState canonical_from_jet(const OscillatorParams& params, const GeneratorJet& jet);

ScaledCanonicalState scale_canonical(const OscillatorParams& params, const CanonicalState& state);
CanonicalState unscale_canonical(const OscillatorParams& params, const ScaledCanonicalState& state);

// H = 2 l^2 q'^2 - q''' q' - w^2 q'^2 + q''^2 / 2 - w^4 q^2 / 2
template <class Real>
Real hamiltonian_potential_form(const OscillatorParams& params, const Jet<Real>& jet) {
  const Real lam = params.lambda;
  const Real w2 = static_cast<Real>(params.omega) * static_cast<Real>(params.omega);
  return 2 * lam * lam * jet.qdot * jet.qdot - jet.qdddot * jet.qdot - w2 * jet.qdot * jet.qdot +
         jet.qddot * jet.qddot / 2 - w2 * w2 * jet.q * jet.q / 2;
}

// H = p2^2 / 2 - w^2 p2 q1 + p1 q2 + 2 l p2 q2
double hamiltonian_canonical(const CanonicalState& state, const OscillatorParams& params);

// H' = p2^2 / 2m - w^2 p2 q1 + p1 q2 + 2 l p2 q2 on the scaled pairs; equals m w^2 H.
double hamiltonian_scaled(const ScaledCanonicalState& state, const OscillatorParams& params);

// Potential-form H along a trajectory. The jet and the quadratic form are evaluated in
// extended precision: with growing b-modes the individual terms exceed H by e^{2(l+|Re g|)t}.
double hamiltonian_on_trajectory(const GeneratorTrajectory& traj, double t);

// Fourth-order Euler-Lagrange expression of the squared Lagrangian,
//   (d^2 + 2 l d + w^2)(d^2 - 2 l d + w^2) q,
// applied mode by mode. Vanishes identically when the rates are exact roots.
double euler_lagrange_residual(const OscillatorParams& params, const GeneratorTrajectory& traj, double t);

}  // namespace damposc::hamiltonian
