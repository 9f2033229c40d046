#include "damposc/quantum.hpp"

#include <cmath>
#include <numbers>

#include "damposc/errors.hpp"

namespace damposc::quantum {

namespace {

// Trapezoid weights: dx everywhere, dx/2 at both ends.
template <class F>
double trapezoid(const Grid1D& grid, F&& f) {
  const std::size_t n = grid.n_points;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    sum += w * f(i);
  }
  return sum * grid.spacing();
}

bool same_grid(const Grid1D& a, const Grid1D& b) {
  return a.x_min == b.x_min && a.x_max == b.x_max && a.n_points == b.n_points;
}

}  // namespace

void validate(const Grid1D& grid) {
  if (!(std::isfinite(grid.x_min) && std::isfinite(grid.x_max) && grid.x_min < grid.x_max)) {
    throw InvalidParameter("grid requires finite x_min < x_max");
  }
  if (grid.n_points < 8) throw InvalidParameter("grid requires at least 8 points");
}

double ground_sigma(const OscillatorParams& params) {
  return std::sqrt(params.hbar / (2.0 * params.mass * params.omega));
}

WaveField init_ground_gaussian(const OscillatorParams& params, const Grid1D& grid, double x0) {
  validate(params);
  validate(grid);
  const double reach = std::abs(x0) + 6.0 * ground_sigma(params);
  if (grid.x_min > -reach || grid.x_max < reach) {
    throw GridTooNarrow("grid must contain |x0| + 6 sigma on both sides");
  }
  const double mw_over_hbar = params.mass * params.omega / params.hbar;
  const double amplitude = std::pow(mw_over_hbar / std::numbers::pi, 0.25);
  WaveField field{grid, std::vector<Complex>(grid.n_points), 0.0};
  for (std::size_t i = 1; i + 1 < grid.n_points; ++i) {
    const double d = grid.x(i) - x0;
    field.values[i] = amplitude * std::exp(-0.5 * mw_over_hbar * d * d);
  }
  return field;
}

CrankNicolsonStepper::CrankNicolsonStepper(const OscillatorParams& params, const Grid1D& grid,
                                           const EvolutionConfig& config)
    : grid_(grid),
      config_(config),
      implicit_([&] {
        validate(params);
        validate(grid);
        if (!(config.dt > 0.0) || !std::isfinite(config.dt)) throw InvalidParameter("dt must be positive");
        if (config.dt * params.omega >= kMaxStepPhase) throw StepTooLarge("dt * omega must be below 0.1");

        const std::size_t n = grid.n_points - 2;
        const double dx = grid.spacing();
        const double half_step = config.dt / (2.0 * params.hbar);
        const double kinetic = params.hbar * params.hbar / (params.mass * dx * dx);
        const double damping = config.damping_mode == DampingMode::coupled ? params.lambda * config.dt : 0.0;

        std::vector<Complex> lower(n, Complex{0.0, -half_step * 0.5 * kinetic});
        std::vector<Complex> upper = lower;
        std::vector<Complex> diag(n);
        explicit_diag_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          const double x = grid.x(i + 1);
          const double h_diag = kinetic + 0.5 * params.mass * params.omega * params.omega * x * x;
          diag[i] = Complex{1.0 + damping, half_step * h_diag};
          explicit_diag_[i] = Complex{1.0 - damping, -half_step * h_diag};
        }
        explicit_off_ = Complex{0.0, half_step * 0.5 * kinetic};
        return TridiagonalSolver(lower, diag, upper);
      }()) {
  if (config.damping_mode == DampingMode::factored) damping_factor_ = std::exp(-2.0 * params.lambda * config.dt);
}

void CrankNicolsonStepper::advance(WaveField& field) const {
  if (!same_grid(field.grid, grid_) || field.values.size() != grid_.n_points) {
    throw InvalidParameter("wave field does not match the stepper grid");
  }
  const std::size_t n = grid_.n_points - 2;
  std::vector<Complex> work(n);
  const Complex* psi = field.values.data() + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex left = i > 0 ? psi[i - 1] : Complex{};
    const Complex right = i + 1 < n ? psi[i + 1] : Complex{};
    work[i] = explicit_diag_[i] * psi[i] + explicit_off_ * (left + right);
  }
  implicit_.solve(work);
  field.values.front() = Complex{};
  field.values.back() = Complex{};
  for (std::size_t i = 0; i < n; ++i) field.values[i + 1] = damping_factor_ * work[i];
  field.time += config_.dt;
}

WaveField step(const WaveField& field, const OscillatorParams& params, const EvolutionConfig& config) {
  WaveField next = field;
  CrankNicolsonStepper(params, field.grid, config).advance(next);
  return next;
}

WaveField evolve(WaveField field, const OscillatorParams& params, const EvolutionConfig& config,
                 const StepObserver& observer) {
  const CrankNicolsonStepper stepper(params, field.grid, config);
  const double t0 = field.time;
  if (observer) observer(0, field);
  for (std::size_t k = 1; k <= config.n_steps; ++k) {
    stepper.advance(field);
    field.time = t0 + static_cast<double>(k) * config.dt;
    if (observer) observer(k, field);
  }
  return field;
}

std::vector<WaveField> evolve(WaveField field, const OscillatorParams& params, const EvolutionConfig& config,
                              std::size_t sample_every) {
  if (sample_every == 0) throw InvalidParameter("sample_every must be at least 1");
  std::vector<WaveField> snapshots;
  evolve(std::move(field), params, config, [&](std::size_t k, const WaveField& f) {
    if (k % sample_every == 0 || k == config.n_steps) snapshots.push_back(f);
  });
  return snapshots;
}

double norm(const WaveField& field) {
  return trapezoid(field.grid, [&](std::size_t i) { return std::norm(field.values[i]); });
}

double expectation_x(const WaveField& field) {
  const double n = norm(field);
  if (n < 1e-300) throw ZeroNorm("cannot normalise a field with vanishing norm");
  return trapezoid(field.grid, [&](std::size_t i) { return field.grid.x(i) * std::norm(field.values[i]); }) / n;
}

double width_x(const WaveField& field) {
  const double mean = expectation_x(field);
  const double n = norm(field);
  const double var = trapezoid(field.grid, [&](std::size_t i) {
                       const double d = field.grid.x(i) - mean;
                       return d * d * std::norm(field.values[i]);
                     }) /
                     n;
  return std::sqrt(var);
}

double overlap_modulus(const WaveField& a, const WaveField& b) {
  if (!same_grid(a.grid, b.grid)) throw InvalidParameter("overlap requires fields on the same grid");
  const std::size_t n = a.grid.n_points;
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    sum += w * std::conj(a.values[i]) * b.values[i];
  }
  return std::abs(sum) * a.grid.spacing();
}

std::vector<DensitySample> density(const WaveField& field) {
  std::vector<DensitySample> out(field.values.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {field.grid.x(i), std::norm(field.values[i])};
  return out;
}

std::vector<double> zero_crossings(const std::vector<double>& times, const std::vector<double>& values) {
  if (times.size() != values.size()) throw InvalidParameter("times and values differ in length");
  std::vector<double> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0.0) {
      out.push_back(times[i]);
    } else if (i + 1 < values.size() && values[i] * values[i + 1] < 0.0) {
      const double frac = values[i] / (values[i] - values[i + 1]);
      out.push_back(times[i] + frac * (times[i + 1] - times[i]));
    }
  }
  return out;
}

}  // namespace damposc::quantum
