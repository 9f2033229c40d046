#include "damposc/packet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "damposc/errors.hpp"

namespace damposc::packet {

void validate(const PacketSpec& spec) {
  if (!std::isfinite(spec.x0)) throw InvalidParameter("x0 must be finite");
  if (!(std::isfinite(spec.gamma_squeeze) && spec.gamma_squeeze > 0.0)) {
    throw InvalidParameter("gamma_squeeze must be positive");
  }
}

double sigma_x(const OscillatorParams& params, const PacketSpec& spec, double t) {
  const double g = spec.gamma_squeeze;
  const double c = std::cos(params.omega * t);
  const double s = std::sin(params.omega * t);
  const double scale = params.hbar / (2.0 * g * params.mass * params.omega);
  return std::sqrt(scale * (c * c + g * g * s * s));
}

double max_sigma_x(const OscillatorParams& params, const PacketSpec& spec) {
  const double g = spec.gamma_squeeze;
  return std::sqrt(params.hbar / (2.0 * g * params.mass * params.omega) * std::max(1.0, g * g));
}

double center(const OscillatorParams& params, const PacketSpec& spec, double t) {
  return spec.x0 * std::cos(params.omega * t);
}

double density_undamped(const OscillatorParams& params, const PacketSpec& spec, double x, double t) {
  const double sigma = sigma_x(params, spec, t);
  const double d = x - center(params, spec, t);
  // Unit-integral prefactor 1 / (sigma sqrt(2 pi)).
  return std::exp(-d * d / (2.0 * sigma * sigma)) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

double density_damped(const OscillatorParams& params, const PacketSpec& spec, double x, double t) {
  return density_undamped(params, spec, x, t) * std::exp(-4.0 * params.lambda * t);
}

}  // namespace damposc::packet
