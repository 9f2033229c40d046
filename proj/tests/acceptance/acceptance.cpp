// Acceptance suite: one PASS/FAIL line per criterion.
//   damposc_acceptance            run all criteria
//   damposc_acceptance 3 7        run a subset
// Exit status is non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "damposc/classical.hpp"
#include "damposc/cli/commands.hpp"
#include "damposc/cli/config.hpp"
#include "damposc/hamiltonian.hpp"
#include "damposc/packet.hpp"
#include "damposc/propagator.hpp"
#include "damposc/quantum.hpp"
#include "oracles.hpp"

namespace {

using namespace damposc;
using damposc::oracle::Draw;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds
  std::function<Outcome()> run;
};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

const OscillatorParams kFigure{1.0, 0.01, 1.0, 1.0};

OscillatorParams draw_params(Draw& draw) {
  // Keep clear of critical damping, where the closed form is singular.
  for (;;) {
    const OscillatorParams p{1.0, draw.uniform(0.01, 5.0), draw.uniform(0.1, 5.0), 1.0};
    if (std::abs(p.lambda - p.omega) > 1e-2 * p.omega) return p;
  }
}

quantum::EvolutionConfig figure_steps(double periods, quantum::DampingMode mode) {
  return {1e-3 * kTwoPi, static_cast<std::size_t>(std::llround(1000 * periods)), mode};
}

quantum::WaveField figure_start(const OscillatorParams& p) {
  return quantum::init_ground_gaussian(p, quantum::Grid1D{-8.0, 8.0, 1024}, -1.0);
}

Outcome c1_hamiltonian_zero() {
  Draw draw(1001);
  double worst = 0.0;  // |H'| / (m w^2 (x0^2 + v0^2 / w^2))
  for (int set = 0; set < 20; ++set) {
    const auto p = draw_params(draw);
    const classical::InitialConditions ic{draw.uniform(-2, 2), draw.uniform(-2, 2)};
    const auto traj = classical::fit_physical_amplitudes(p, ic);
    const double bound_scale = p.mass * p.omega * p.omega * (ic.x0 * ic.x0 + ic.v0 * ic.v0 / (p.omega * p.omega));
    const double horizon = std::min(10.0 / p.lambda, 50.0 / p.omega);
    for (int k = 0; k <= 400; ++k) {
      const double t = horizon * k / 400.0;
      const double h_scaled = p.mass * p.omega * p.omega * hamiltonian::hamiltonian_on_trajectory(traj, t);
      worst = std::max(worst, std::abs(h_scaled) / bound_scale);
    }
  }
  return {worst < 1e-10, "max |H'|/(m w^2 (x0^2+v0^2/w^2)) = " + fmt_double(worst) + " (limit 1e-10)"};
}

Outcome c2_hamiltonian_constancy() {
  Draw draw(1002);
  double worst = 0.0;
  for (int set = 0; set < 200; ++set) {
    const auto p = draw_params(draw);
    const auto g = classical::classical_gamma(p);
    classical::GeneratorTrajectory::Modes m;
    if (g.regime == classical::DampingRegime::overdamped) {
      for (auto& a : m) a = draw.uniform(-1, 1);
    } else {
      const std::complex<double> a{draw.uniform(-1, 1), draw.uniform(-1, 1)};
      const std::complex<double> b{draw.uniform(-1, 1), draw.uniform(-1, 1)};
      m = {a, std::conj(a), b, std::conj(b)};
    }
    const auto traj = classical::GeneratorTrajectory::from_amplitudes(p, m);
    const double horizon = std::min(5.0 / p.lambda, 5.0 / (p.lambda + std::abs(g.value.real())));
    const double h0 = hamiltonian::hamiltonian_on_trajectory(traj, 0.0);
    for (int k = 1; k <= 50; ++k) {
      const double t = horizon * k / 50.0;
      worst = std::max(worst, std::abs(hamiltonian::hamiltonian_on_trajectory(traj, t) - h0) / std::abs(h0));
    }
  }
  return {worst < 1e-9, "max |H(t)-H(0)|/|H| = " + fmt_double(worst) + " over 200 draws (limit 1e-9)"};
}

Outcome c3_oracle_equivalence() {
  Draw draw(1003);
  std::vector<std::pair<OscillatorParams, classical::InitialConditions>> cases{{kFigure, {-1.0, 0.0}}};
  while (cases.size() < 11) {
    const auto p = draw_params(draw);
    cases.push_back({p, {draw.uniform(-2, 2), draw.uniform(-2, 2)}});
  }
  double worst = 0.0;
  double worst_relative = 0.0;
  for (const auto& [p, ic] : cases) {
    const auto traj = classical::fit_physical_amplitudes(p, ic);
    const double t_end = 20 * kPi / p.omega;
    const double dt = classical::suggested_oracle_step(p);
    const auto every = static_cast<std::size_t>(std::max(1.0, std::ceil(t_end / dt / 20000)));
    double err = 0.0;
    for (const auto& s : classical::integrate_x_oracle(p, ic, t_end, dt, every))
      err = std::max(err, std::abs(s.x - classical::reconstruct_x(traj, s.t)));
    worst = std::max(worst, err);
    worst_relative = std::max(worst_relative, err / std::max(std::abs(ic.x0), std::abs(ic.v0) / p.omega));
  }
  return {worst < 1e-6, "max |x_closed - x_oracle| = " + fmt_double(worst) + " (limit 1e-6), relative " +
                            fmt_double(worst_relative)};
}

Outcome c4_form_agreement() {
  Draw draw(1004);
  double worst_forms = 0.0;
  double worst_scaling = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const OscillatorParams p{draw.log_uniform(0.1, 10), draw.uniform(0, 5), draw.uniform(0.1, 5), 1.0};
    const classical::GeneratorJet jet{draw.uniform(-1, 1), draw.uniform(-1, 1), draw.uniform(-1, 1),
                                      draw.uniform(-1, 1)};
    const double a = hamiltonian::hamiltonian_potential_form(p, jet);
    const auto state = hamiltonian::canonical_from_jet(p, jet);
    const double b = hamiltonian::hamiltonian_canonical(state, p);
    worst_forms = std::max(worst_forms, std::abs(a - b) / std::abs(a));
    const double scaled = hamiltonian::hamiltonian_scaled(hamiltonian::scale_canonical(p, state), p);
    const double expected = p.mass * p.omega * p.omega * b;
    worst_scaling = std::max(worst_scaling, std::abs(scaled - expected) / std::abs(expected));
  }
  return {worst_forms < 1e-12 && worst_scaling < 1e-12,
          "form agreement " + fmt_double(worst_forms) + ", scaling " + fmt_double(worst_scaling) +
              " relative over 1000 states (limit 1e-12)"};
}

Outcome c5_norm_decay() {
  double worst = 0.0;
  std::string detail;
  quantum::evolve(figure_start(kFigure), kFigure, figure_steps(2, quantum::DampingMode::coupled),
                  [&](std::size_t k, const quantum::WaveField& f) {
                    if (k != 1000 && k != 2000) return;
                    const double dev = std::abs(quantum::norm(f) / std::exp(-4 * kFigure.lambda * f.time) - 1);
                    worst = std::max(worst, dev);
                    detail += (k == 1000 ? "t=T: " : ", t=2T: ") + fmt_double(dev);
                  });
  return {worst < 1e-3, "|norm/e^{-4 lambda t} - 1| " + detail + " (limit 1e-3)"};
}

Outcome c6_factorization() {
  const auto undamped_params = OscillatorParams{1.0, 0.0, 1.0, 1.0};
  const quantum::StepObserver none;
  const auto undamped = quantum::evolve(figure_start(undamped_params), undamped_params,
                                        figure_steps(1, quantum::DampingMode::coupled), none);
  const auto factored =
      quantum::evolve(figure_start(kFigure), kFigure, figure_steps(1, quantum::DampingMode::factored), none);
  const auto coupled =
      quantum::evolve(figure_start(kFigure), kFigure, figure_steps(1, quantum::DampingMode::coupled), none);
  const double decay = std::exp(-2 * kFigure.lambda * undamped.time);
  double gap_factored = 0.0, gap_coupled = 0.0;
  for (std::size_t i = 0; i < undamped.values.size(); ++i) {
    const auto product = undamped.values[i] * decay;
    gap_factored = std::max(gap_factored, std::abs(factored.values[i] - product));
    gap_coupled = std::max(gap_coupled, std::abs(coupled.values[i] - product));
  }
  return {gap_factored < 1e-12 && gap_coupled < 1e-6,
          "factored " + fmt_double(gap_factored) + " (limit 1e-12), coupled " + fmt_double(gap_coupled) +
              " (limit 1e-6) max pointwise at t=T"};
}

Outcome c7_frequency_invariance() {
  std::vector<std::vector<double>> periods;
  for (double lambda : {0.0, 0.01, 0.05}) {
    const OscillatorParams p{1.0, lambda, 1.0, 1.0};
    std::vector<double> t, x;
    quantum::evolve(figure_start(p), p, figure_steps(2, quantum::DampingMode::coupled),
                    [&](std::size_t, const quantum::WaveField& f) {
                      t.push_back(f.time);
                      x.push_back(quantum::expectation_x(f));
                    });
    const auto z = quantum::zero_crossings(t, x);
    std::vector<double> per;
    for (std::size_t i = 0; i + 2 < z.size(); ++i) per.push_back(z[i + 2] - z[i]);
    periods.push_back(per);
  }
  if (periods[0].empty()) return {false, "no full period between zero crossings"};
  double spread = 0.0, offset = 0.0;
  for (const auto& per : periods) {
    if (per.size() != periods[0].size()) return {false, "different number of zero crossings across lambda"};
    for (std::size_t i = 0; i < per.size(); ++i) {
      spread = std::max(spread, std::abs(per[i] - periods[0][i]));
      offset = std::max(offset, std::abs(per[i] - kTwoPi));
    }
  }
  return {spread < 1e-3 * kTwoPi, "max period difference across lambda = " + fmt_double(spread / kTwoPi) +
                                      " T (limit 1e-3 T), max |period - T| = " + fmt_double(offset / kTwoPi) + " T"};
}

struct DensityRow {
  double x, numeric, analytic;
};

Outcome c8_figure_reproduction() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "damposc_acceptance_fig1";
  fs::remove_all(dir);
  const auto cfg = cli::parse_config(R"({"mass": 1, "hbar": 1, "omega": 1, "lambda": 0.01, "x0": -1, "v0": 0})");
  const auto summary = cli::cmd_evolve(cfg, dir);

  std::map<double, std::vector<DensityRow>> snapshots;
  std::ifstream in(dir / "density.csv");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    double v[4];
    for (double& value : v) {
      std::getline(ss, cell, ',');
      value = std::stod(cell);
    }
    snapshots[v[0]].push_back({v[1], v[2], v[3]});
  }
  std::ifstream svg_in(dir / "fig1.svg");
  const std::string svg((std::istreambuf_iterator<char>(svg_in)), {});
  std::size_t polylines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++polylines;

  // The squeezed variant of the caption is rendered too; only its file is checked.
  const auto squeezed_dir = dir / "squeezed";
  auto squeezed = cfg;
  squeezed.packet.gamma_squeeze = 0.8;
  cli::cmd_evolve(squeezed, squeezed_dir);
  const bool squeezed_svg = fs::file_size(squeezed_dir / "fig1.svg") > 0;
  fs::remove_all(dir);

  const double dx = cfg.grid.spacing();
  double centre = 0.0, mass = 0.0, overlay = 0.0;
  bool times_ok = snapshots.size() == 9 && summary.snapshots == 9;
  std::size_t k = 0;
  for (const auto& [t, rows] : snapshots) {
    times_ok = times_ok && std::abs(t - k++ * kTwoPi / 8) < 1e-9;
    auto peak = rows.front();
    double integral = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].numeric > peak.numeric) peak = rows[i];
      if (i > 0) integral += 0.5 * (rows[i].numeric + rows[i - 1].numeric) * (rows[i].x - rows[i - 1].x);
      overlay = std::max(overlay, std::abs(rows[i].numeric - rows[i].analytic));
    }
    centre = std::max(centre, std::abs(peak.x + std::cos(t)) / dx);
    mass = std::max(mass, std::abs(integral / std::exp(-4 * kFigure.lambda * t) - 1));
  }
  // Each snapshot contributes a numeric and a dashed analytic curve.
  const bool svg_ok = polylines >= 18 && squeezed_svg;
  return {times_ok && svg_ok && centre <= 2.0 && mass < 1e-3 && overlay < 1e-3,
          std::to_string(snapshots.size()) + " snapshots at k T/8, " + std::to_string(polylines) +
              " svg curves; centre offset " + fmt_double(centre) + " dx (limit 2), |integral/e^{-4 lambda t} - 1| " +
              fmt_double(mass) + " (limit 1e-3), max |rho_num - rho_analytic| " + fmt_double(overlay) +
              " (limit 1e-3)"};
}

Outcome c9_unitarity() {
  const OscillatorParams p{1.0, 0.0, 1.0, 1.0};
  const auto start = figure_start(p);
  double drift = 0.0;
  const auto end = quantum::evolve(start, p, figure_steps(1, quantum::DampingMode::coupled),
                                   [&](std::size_t, const quantum::WaveField& f) {
                                     drift = std::max(drift, std::abs(quantum::norm(f) - quantum::norm(start)));
                                   });
  const double fidelity = quantum::overlap_modulus(end, start);
  return {drift < 1e-10 && fidelity > 0.999,
          "norm drift " + fmt_double(drift) + " (limit 1e-10), fidelity " + std::to_string(fidelity) + " (limit 0.999)"};
}

Outcome c10_path_integral() {
  const std::vector<std::size_t> slices{16, 32, 64, 128, 256, 512};
  const auto points =
      propagator::kernel_convergence(OscillatorParams{1.0, 0.0, 1.0, 1.0}, kPi / 4, {-10.0, 10.0, 512}, slices);
  double at256 = 0.0;
  double lo = 1e300, hi = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].n_slices == 256) at256 = points[i].l2_error;
    if (i > 0) {
      const double ratio = points[i - 1].l2_error / points[i].l2_error;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  return {at256 > 0 && at256 < 1e-3 && lo >= 1.6 && hi <= 2.4,
          "L2 error at 256 slices " + fmt_double(at256) + " (limit 1e-3), doubling ratios in [" + std::to_string(lo) +
              ", " + std::to_string(hi) + "] (limit [1.6, 2.4])"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "hamiltonian_zero_on_physical_motion", 1, c1_hamiltonian_zero},
      {2, "hamiltonian_constancy_off_physical_subspace", 1, c2_hamiltonian_constancy},
      {3, "classical_oracle_equivalence", 1, c3_oracle_equivalence},
      {4, "hamiltonian_form_agreement_and_scaling", 1, c4_form_agreement},
      {5, "norm_decay", 30, c5_norm_decay},
      {6, "damping_factorization", 60, c6_factorization},
      {7, "frequency_invariance", 60, c7_frequency_invariance},
      {8, "figure_one_reproduction", 60, c8_figure_reproduction},
      {9, "undamped_unitarity_and_periodicity", 30, c9_unitarity},
      {10, "path_integral_convergence", 60, c10_path_integral},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < c.time_limit;
    const bool pass = outcome.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s [%d] %s: %s; runtime %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str(), elapsed, c.time_limit, in_time ? "" : " exceeded");
  }
  return failures == 0 ? 0 : 1;
}
