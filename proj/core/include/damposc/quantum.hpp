#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "damposc/params.hpp"
#include "damposc/tridiagonal.hpp"

namespace damposc::quantum {

using Complex = std::complex<double>;

// Uniform grid including both end points.
struct Grid1D {
  double x_min = -8.0;
  double x_max = 8.0;
  std::size_t n_points = 1024;

  [[nodiscard]] double spacing() const noexcept { return (x_max - x_min) / static_cast<double>(n_points - 1); }
  [[nodiscard]] double x(std::size_t i) const noexcept {
    return i + 1 == n_points ? x_max : x_min + static_cast<double>(i) * spacing();
  }
};

// Throws InvalidParameter unless x_min < x_max and n_points >= 8.
void validate(const Grid1D& grid);

struct WaveField {
  Grid1D grid;
  std::vector<Complex> values;
  double time = 0.0;
};

enum class DampingMode {
  coupled,   // -2 i hbar lambda kept on the diagonal of the implicit system
  factored,  // Hermitian step followed by the exact factor e^{-2 lambda dt}
};

struct EvolutionConfig {
  double dt = 0.0;
  std::size_t n_steps = 0;
  DampingMode damping_mode = DampingMode::coupled;
};

// Upper bound on dt * omega.
inline constexpr double kMaxStepPhase = 0.1;

// Standard deviation of the position density of the ground state, sqrt(hbar / 2 m omega).
double ground_sigma(const OscillatorParams& params);

// (m w / pi hbar)^{1/4} exp(-m w (x - x0)^2 / 2 hbar) sampled on the grid.
// Throws GridTooNarrow unless [-|x0| - 6 sigma, |x0| + 6 sigma] lies inside the grid.
WaveField init_ground_gaussian(const OscillatorParams& params, const Grid1D& grid, double x0);

// Crank-Nicolson propagator for
//   i hbar psi_t = -(hbar^2 / 2m) psi_xx + (m w^2 x^2 / 2) psi - 2 i hbar lambda psi
// with psi fixed to zero at both grid ends. The implicit system is factorised once.
class CrankNicolsonStepper {
 public:
  CrankNicolsonStepper(const OscillatorParams& params, const Grid1D& grid, const EvolutionConfig& config);

  void advance(WaveField& field) const;

  [[nodiscard]] const EvolutionConfig& config() const noexcept { return config_; }

 private:
  Grid1D grid_;
  EvolutionConfig config_;
  // Explicit bands are filled while the implicit system is assembled, so they come first.
  std::vector<Complex> explicit_diag_;
  Complex explicit_off_{};
  TridiagonalSolver implicit_;
  double damping_factor_ = 1.0;
};

WaveField step(const WaveField& field, const OscillatorParams& params, const EvolutionConfig& config);

// Runs config.n_steps steps. Snapshots are taken at step 0, every `sample_every` steps,
// and at the final step.
std::vector<WaveField> evolve(WaveField field, const OscillatorParams& params, const EvolutionConfig& config,
                              std::size_t sample_every);

// Same loop, calling `observer` after every step (and once before the first).
using StepObserver = std::function<void(std::size_t step, const WaveField& field)>;
WaveField evolve(WaveField field, const OscillatorParams& params, const EvolutionConfig& config,
                 const StepObserver& observer);

// Trapezoid-rule integral of |psi|^2.
double norm(const WaveField& field);

// <x> normalised by the current norm. Throws ZeroNorm when the norm is below 1e-300.
double expectation_x(const WaveField& field);

// sqrt(<x^2> - <x>^2), normalised like expectation_x.
double width_x(const WaveField& field);

// |<a|b>| with trapezoid weights; both fields must share a grid.
double overlap_modulus(const WaveField& a, const WaveField& b);

struct DensitySample {
  double x;
  double rho;
};

// |psi_i|^2 without normalisation.
std::vector<DensitySample> density(const WaveField& field);

// Times where the linearly interpolated samples change sign.
std::vector<double> zero_crossings(const std::vector<double>& times, const std::vector<double>& values);

}  // namespace damposc::quantum
