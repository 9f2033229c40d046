#include "damposc/propagator.hpp"

#include <cmath>
#include <numbers>

#include "damposc/errors.hpp"

namespace damposc::propagator {

namespace {

constexpr double kPi = std::numbers::pi;

void check_time(const OscillatorParams& params, double t) {
  validate(params);
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidParameter("propagation time must be positive");
  if (std::abs(std::sin(params.omega * t)) <= kCausticTolerance) {
    throw CausticError("harmonic kernel is singular at omega * t = n * pi");
  }
}

// Closed-form pieces shared by every (x_a, x_b) pair at a fixed time.
struct KernelFactors {
  Complex prefactor;
  double phase_scale;  // m w / (2 hbar sin)
  double cos_wt;

  KernelFactors(const OscillatorParams& params, double t) {
    check_time(params, t);
    const double wt = params.omega * t;
    const double s = std::sin(wt);
    cos_wt = std::cos(wt);
    phase_scale = params.mass * params.omega / (2.0 * params.hbar * s);
    const double half_periods = std::floor(wt / kPi);
    const double magnitude = std::sqrt(params.mass * params.omega / (2.0 * kPi * params.hbar * std::abs(s)));
    prefactor = std::polar(magnitude, -0.25 * kPi - 0.5 * kPi * half_periods);
  }

  [[nodiscard]] Complex operator()(double x_a, double x_b) const {
    const double phase = phase_scale * ((x_a * x_a + x_b * x_b) * cos_wt - 2.0 * x_a * x_b);
    return prefactor * std::polar(1.0, phase);
  }
};

}  // namespace

Complex harmonic_kernel(const OscillatorParams& params, double x_a, double x_b, double t) {
  return KernelFactors(params, t)(x_a, x_b);
}

SlicedKernel::SlicedKernel(const OscillatorParams& params, double t, std::size_t n_slices) : n_slices_(n_slices) {
  check_time(params, t);
  if (n_slices == 0) throw InvalidParameter("at least one time slice is required");

  const double eps = t / static_cast<double>(n_slices);
  const double kinetic = params.mass / (2.0 * params.hbar * eps);                                  // (y - x)^2
  const double potential = eps * params.mass * params.omega * params.omega / (2.0 * params.hbar);  // x^2
  const Complex slice_norm = std::polar(std::sqrt(params.mass / (2.0 * kPi * params.hbar * eps)), -0.25 * kPi);

  // One slice: potential at the departure point x_a.
  prefactor_ = slice_norm;
  alpha_ = kinetic - potential;
  beta_ = kinetic;
  cross_ = -2.0 * kinetic;

  // Fold in further slices, integrating out the previous end point y:
  //   int dy exp{i[(beta + kinetic - potential) y^2 + (cross x_a - 2 kinetic z) y]}.
  for (std::size_t k = 1; k < n_slices; ++k) {
    const double curvature = beta_ + kinetic - potential;
    if (std::abs(curvature) < 1e-12 * kinetic) throw CausticError("sliced kernel passes through a caustic");
    const Complex fresnel = std::polar(std::sqrt(kPi / std::abs(curvature)), curvature > 0.0 ? 0.25 * kPi : -0.25 * kPi);
    prefactor_ *= slice_norm * fresnel;
    alpha_ -= cross_ * cross_ / (4.0 * curvature);
    cross_ *= kinetic / curvature;
    beta_ = kinetic - kinetic * kinetic / curvature;
  }
}

Complex SlicedKernel::operator()(double x_a, double x_b) const {
  return prefactor_ * std::polar(1.0, alpha_ * x_a * x_a + beta_ * x_b * x_b + cross_ * x_a * x_b);
}

Complex sliced_kernel(const OscillatorParams& params, double x_a, double x_b, double t, std::size_t n_slices) {
  return SlicedKernel(params, t, n_slices)(x_a, x_b);
}

std::vector<double> sample_nodes(const quantum::Grid1D& grid, double radius, std::size_t count) {
  quantum::validate(grid);
  if (count < 2) throw InvalidParameter("at least two sample nodes are required");
  std::vector<double> inside;
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    if (std::abs(grid.x(i)) <= radius) inside.push_back(grid.x(i));
  }
  if (inside.size() < count) throw InvalidParameter("too few grid nodes inside the sample radius");
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = inside[j * (inside.size() - 1) / (count - 1)];
  return out;
}

double kernel_l2_error(const OscillatorParams& params, double t, std::size_t n_slices,
                       std::span<const double> nodes) {
  const KernelFactors exact(params, t);
  const SlicedKernel sliced(params, t, n_slices);
  double err2 = 0.0;
  double ref2 = 0.0;
  for (double x_a : nodes) {
    for (double x_b : nodes) {
      const Complex ref = exact(x_a, x_b);
      err2 += std::norm(sliced(x_a, x_b) - ref);
      ref2 += std::norm(ref);
    }
  }
  return std::sqrt(err2 / ref2);
}

std::vector<ConvergencePoint> kernel_convergence(const OscillatorParams& params, double t,
                                                 const quantum::Grid1D& grid, std::span<const std::size_t> slices,
                                                 double radius) {
  const std::vector<double> nodes = sample_nodes(grid, radius, 8);
  std::vector<ConvergencePoint> out;
  out.reserve(slices.size());
  for (std::size_t n : slices) out.push_back({n, kernel_l2_error(params, t, n, nodes)});
  return out;
}

quantum::WaveField propagate_by_kernel(const OscillatorParams& params, const quantum::WaveField& initial, double t) {
  const KernelFactors kernel(params, t);
  const quantum::Grid1D& grid = initial.grid;
  const std::size_t n = grid.n_points;
  const double dx = grid.spacing();
  quantum::WaveField out{grid, std::vector<Complex>(n), initial.time + t};
  for (std::size_t j = 0; j < n; ++j) {
    const double x_b = grid.x(j);
    Complex sum{};
    for (std::size_t i = 0; i < n; ++i) {
      if (initial.values[i] == Complex{}) continue;
      const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
      sum += w * kernel(grid.x(i), x_b) * initial.values[i];
    }
    out.values[j] = sum * dx;
  }
  return out;
}

}  // namespace damposc::propagator
