#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "damposc/params.hpp"
#include "damposc/quantum.hpp"

namespace damposc::propagator {

using Complex = std::complex<double>;

// |sin(w t)| at or below this value is treated as a caustic.
inline constexpr double kCausticTolerance = 1e-9;

struct KernelPoint {
  double x_a;
  double x_b;
  double t;
  Complex value;
};

// Closed-form harmonic-oscillator propagator <x_b| e^{-iHt/hbar} |x_a> including the
// e^{-i pi/2} phase picked up at every half period. Throws CausticError at w t = n pi.
Complex harmonic_kernel(const OscillatorParams& params, double x_a, double x_b, double t);

// Time-sliced path integral with n slices of the short-time kernel
//   sqrt(m / 2 pi i hbar e) exp{(i/hbar)[m (y - x)^2 / 2e - e V(x)]},
// potential taken at the departure point of each slice (first-order splitting).
// Every intermediate integral is Gaussian and is carried out exactly, so the result is a
// quadratic form A exp{i (alpha x_a^2 + beta x_b^2 + cross x_a x_b)} whose coefficients are
// computed once per (t, n).
class SlicedKernel {
 public:
  SlicedKernel(const OscillatorParams& params, double t, std::size_t n_slices);

  [[nodiscard]] Complex operator()(double x_a, double x_b) const;

  [[nodiscard]] std::size_t slices() const noexcept { return n_slices_; }

 private:
  std::size_t n_slices_;
  Complex prefactor_;
  double alpha_ = 0.0;  // x_a^2
  double beta_ = 0.0;   // x_b^2
  double cross_ = 0.0;  // x_a x_b
};

Complex sliced_kernel(const OscillatorParams& params, double x_a, double x_b, double t, std::size_t n_slices);

// Grid nodes with |x| <= radius, thinned to `count` evenly spaced nodes.
std::vector<double> sample_nodes(const quantum::Grid1D& grid, double radius, std::size_t count);

// Relative L2 error of the sliced kernel against harmonic_kernel over all (x_a, x_b)
// pairs drawn from `nodes`.
double kernel_l2_error(const OscillatorParams& params, double t, std::size_t n_slices,
                       std::span<const double> nodes);

struct ConvergencePoint {
  std::size_t n_slices;
  double l2_error;
};

// Errors for each slice count on an 8 x 8 sample of grid nodes within |x| <= radius.
std::vector<ConvergencePoint> kernel_convergence(const OscillatorParams& params, double t,
                                                 const quantum::Grid1D& grid, std::span<const std::size_t> slices,
                                                 double radius = 1.0);

// psi(x, t) = int K(x', x, t) psi(x', 0) dx' by trapezoid quadrature over the field's grid.
quantum::WaveField propagate_by_kernel(const OscillatorParams& params, const quantum::WaveField& initial, double t);

}  // namespace damposc::propagator
