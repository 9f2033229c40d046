#pragma once

#include "damposc/params.hpp"

namespace damposc::packet {

// Breathing Gaussian: x0 is the initial centre, gamma_squeeze modulates the width
// (1 gives the rigid coherent packet).
struct PacketSpec {
  double x0 = 0.0;
  double gamma_squeeze = 1.0;
};

void validate(const PacketSpec& spec);

// sigma_x^2 = hbar / (2 g m w) [cos^2(w t) + g^2 sin^2(w t)]
double sigma_x(const OscillatorParams& params, const PacketSpec& spec, double t);

// Largest sigma_x over a period.
double max_sigma_x(const OscillatorParams& params, const PacketSpec& spec);

double center(const OscillatorParams& params, const PacketSpec& spec, double t);

// Unit-mass Gaussian centred at x0 cos(w t) with width sigma_x(t).
double density_undamped(const OscillatorParams& params, const PacketSpec& spec, double x, double t);

// density_undamped * e^{-4 lambda t}
double density_damped(const OscillatorParams& params, const PacketSpec& spec, double x, double t);

}  // namespace damposc::packet
