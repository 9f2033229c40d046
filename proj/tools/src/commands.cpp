#include "damposc/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "damposc/classical.hpp"
#include "damposc/cli/csv.hpp"
#include "damposc/cli/svg.hpp"
#include "damposc/hamiltonian.hpp"
#include "damposc/packet.hpp"
#include "damposc/propagator.hpp"
#include "damposc/quantum.hpp"

namespace damposc::cli {

namespace {

std::ofstream open_output(const std::filesystem::path& dir, const char* name) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw Error("cannot write " + (dir / name).string());
  return out;
}

bool degenerate_closed_form(const OscillatorParams& params) {
  return params.lambda == 0.0 || classical::classical_gamma(params).regime == classical::DampingRegime::critical;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

CheckResult skipped(std::string name, std::string note) {
  return {std::move(name), 0.0, 0.0, CheckStatus::skipped, std::move(note)};
}

CheckResult measured(std::string name, double value, double tolerance, std::string note = {}) {
  const CheckStatus status = value < tolerance ? CheckStatus::pass : CheckStatus::fail;
  return {std::move(name), value, tolerance, status, std::move(note)};
}

// Sum of term magnitudes of the potential-form Hamiltonian; used to make round-off checks relative.
double hamiltonian_scale(const OscillatorParams& p, const classical::GeneratorJet& j) {
  const double lam = p.lambda;
  const double w2 = p.omega * p.omega;
  return std::abs(2 * lam * lam * j.qdot * j.qdot) + std::abs(j.qdddot * j.qdot) + std::abs(w2 * j.qdot * j.qdot) +
         std::abs(0.5 * j.qddot * j.qddot) + std::abs(0.5 * w2 * w2 * j.q * j.q);
}

// Amplitudes giving a real q(t) with both decaying and growing modes.
classical::GeneratorTrajectory::Modes mixed_amplitudes(const OscillatorParams& params) {
  using C = std::complex<double>;
  if (classical::classical_gamma(params).value.imag() != 0.0) {
    const C a{0.3, 0.1};
    const C b{0.1, -0.2};
    return {a, std::conj(a), b, std::conj(b)};
  }
  return {C{0.3}, C{-0.2}, C{0.1}, C{0.25}};
}

struct Trace {
  std::vector<double> t;
  std::vector<double> norm;
  std::vector<double> mean;
  std::vector<quantum::WaveField> kept;  // fields at requested steps
};

Trace run_trace(const OscillatorParams& params, const RunConfig& cfg, quantum::DampingMode mode, std::size_t n_steps,
                const std::vector<std::size_t>& keep_steps, double dt = 0.0) {
  quantum::EvolutionConfig evo{dt > 0.0 ? dt : cfg.evolution.dt, n_steps, mode};
  Trace trace;
  quantum::evolve(quantum::init_ground_gaussian(params, cfg.grid, cfg.ic.x0), params, evo,
                  [&](std::size_t k, const quantum::WaveField& f) {
                    trace.t.push_back(f.time);
                    trace.norm.push_back(quantum::norm(f));
                    trace.mean.push_back(quantum::expectation_x(f));
                    if (std::find(keep_steps.begin(), keep_steps.end(), k) != keep_steps.end()) {
                      trace.kept.push_back(f);
                    }
                  });
  return trace;
}

double max_pointwise(const quantum::WaveField& a, const quantum::WaveField& b, double scale_b = 1.0) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - scale_b * b.values[i]));
  return worst;
}

// Period from same-direction zero crossings of <x>(t).
double crossing_period(const Trace& trace) {
  const auto crossings = quantum::zero_crossings(trace.t, trace.mean);
  if (crossings.size() < 3) return std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 < crossings.size(); ++i) sum += crossings[i + 2] - crossings[i];
  return sum / static_cast<double>(crossings.size() - 2);
}

void classical_checks(const RunConfig& cfg, VerifyReport& report) {
  const OscillatorParams& p = cfg.params;
  const double w2 = p.omega * p.omega;
  const bool degenerate = degenerate_closed_form(p);
  const char* why = "closed-form amplitudes are singular for lambda = 0 or critical damping";

  if (degenerate) {
    report.checks.push_back(skipped("hamiltonian_zero", why));
  } else {
    const auto traj = classical::fit_physical_amplitudes(p, cfg.ic);
    const double horizon = std::min(10.0 / p.lambda, 50.0 / p.omega);
    double scale = p.mass * w2 * (cfg.ic.x0 * cfg.ic.x0 + cfg.ic.v0 * cfg.ic.v0 / w2);
    if (scale == 0.0) scale = p.mass * w2;
    double worst = 0.0;
    for (double t : linspace(0.0, horizon, 201)) {
      const auto jet = classical::eval_generator_jet(traj, t);
      const double h = hamiltonian::hamiltonian_on_trajectory(traj, t) - cfg.hooks.hamiltonian_offset * 0.5 * w2 * w2 * jet.q * jet.q;
      worst = std::max(worst, std::abs(p.mass * w2 * h));
    }
    report.checks.push_back(measured("hamiltonian_zero", worst / scale, 1e-10, "max |H'| / (m w^2 (x0^2 + v0^2/w^2))"));
  }

  if (p.lambda == 0.0) {
    // Growing and decaying rates coincide, so every representable trajectory has H = 0.
    report.checks.push_back(skipped("hamiltonian_constancy", "no damping (lambda = 0)"));
  } else {
    const auto traj = classical::GeneratorTrajectory::from_amplitudes(p, mixed_amplitudes(p));
    const auto gamma = classical::classical_gamma(p);
    const double horizon = std::min(5.0 / (p.lambda + std::abs(gamma.value.real())), 50.0 / p.omega);
    const double h0 = hamiltonian::hamiltonian_on_trajectory(traj, 0.0);
    double worst = 0.0;
    for (double t : linspace(0.0, horizon, 101)) {
      worst = std::max(worst, std::abs(hamiltonian::hamiltonian_on_trajectory(traj, t) - h0));
    }
    report.checks.push_back(measured("hamiltonian_constancy", worst / std::abs(h0), 1e-9, "growing modes included"));
  }

  {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double form = 0.0;
    double scaling = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const classical::GeneratorJet jet{u(rng), u(rng), u(rng), u(rng)};
      const double h_pot = hamiltonian::hamiltonian_potential_form(p, jet);
      const auto state = hamiltonian::canonical_from_jet(p, jet);
      const double h_can = hamiltonian::hamiltonian_canonical(state, p);
      const double scale = hamiltonian_scale(p, jet);
      form = std::max(form, std::abs(h_can - h_pot) / scale);
      const double h_scaled = hamiltonian::hamiltonian_scaled(hamiltonian::scale_canonical(p, state), p);
      scaling = std::max(scaling, std::abs(h_scaled - p.mass * w2 * h_can) / (p.mass * w2 * scale));
    }
    report.checks.push_back(measured("form_agreement", form, 1e-12, "1000 random jets"));
    report.checks.push_back(measured("scaling_law", scaling, 1e-12, "H' = m w^2 H"));
  }

  {
    const auto traj = degenerate ? classical::GeneratorTrajectory::from_amplitudes(p, mixed_amplitudes(p))
                                 : classical::fit_physical_amplitudes(p, cfg.ic);
    double worst = 0.0;
    for (double t : linspace(0.0, 10.0 / p.omega, 100)) {
      double scale = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        const auto r = traj.rates()[k];
        const double f = std::abs(r * r) + 2.0 * p.lambda * std::abs(r) + w2;
        scale += std::abs(traj.amplitudes()[k] * std::exp(r * t)) * f * f;
      }
      if (scale > 0.0) worst = std::max(worst, std::abs(hamiltonian::euler_lagrange_residual(p, traj, t)) / scale);
    }
    report.checks.push_back(measured("euler_lagrange_residual", worst, 1e-9));
  }

  if (degenerate) {
    report.checks.push_back(skipped("eom_residual", why));
    report.checks.push_back(skipped("oracle_equivalence", why));
    return;
  }
  const auto traj = classical::fit_physical_amplitudes(p, cfg.ic);
  const double t_end = 20.0 * std::numbers::pi / p.omega;
  const double x_scale = std::max(std::abs(cfg.ic.x0), std::abs(cfg.ic.v0) / p.omega);
  double eom = 0.0;
  for (double t : linspace(0.0, t_end, 100)) {
    const double x = classical::coordinate_derivative(traj, 0, t);
    const double v = classical::coordinate_derivative(traj, 1, t);
    const double a = classical::coordinate_derivative(traj, 2, t);
    eom = std::max(eom, std::abs(a + 2.0 * p.lambda * v + w2 * x));
  }
  const double eom_scale = std::max(w2 * std::abs(cfg.ic.x0), p.omega * std::abs(cfg.ic.v0));
  report.checks.push_back(measured("eom_residual", eom_scale > 0.0 ? eom / eom_scale : eom, 1e-9));

  const double dt = classical::suggested_oracle_step(p);
  double oracle = 0.0;
  for (const auto& s : classical::integrate_x_oracle(p, cfg.ic, t_end, dt)) {
    oracle = std::max(oracle, std::abs(classical::reconstruct_x(traj, s.t) - s.x));
  }
  report.checks.push_back(measured("oracle_equivalence", x_scale > 0.0 ? oracle / x_scale : oracle, 1e-6));
}

void quantum_checks(const RunConfig& cfg, VerifyReport& report) {
  const OscillatorParams& p = cfg.params;
  const double dt = cfg.evolution.dt;
  const auto period_steps = static_cast<std::size_t>(std::llround(p.period() / dt));
  const double period = static_cast<double>(period_steps) * dt;

  OscillatorParams undamped = p;
  undamped.lambda = 0.0;
  const Trace ref = run_trace(undamped, cfg, quantum::DampingMode::coupled, 2 * period_steps, {0, period_steps});

  double drift = 0.0;
  for (std::size_t k = 0; k <= period_steps; ++k) drift = std::max(drift, std::abs(ref.norm[k] / ref.norm[0] - 1.0));
  report.checks.push_back(measured("unitarity", drift, 1e-10, "lambda = 0 norm drift over one period"));
  const double fidelity = quantum::overlap_modulus(ref.kept[0], ref.kept[1]) / ref.norm[0];
  report.checks.push_back(measured("periodicity", 1.0 - fidelity, 1e-3, "1 - |<psi(T)|psi(0)>|"));

  {
    // gamma_s = 1 is the packet that the ground-state Gaussian actually follows.
    const packet::PacketSpec coherent{cfg.ic.x0, 1.0};
    const Trace damped = run_trace(p, cfg, cfg.evolution.damping_mode, period_steps,
                                   [&] {
                                     std::vector<std::size_t> ks;
                                     for (std::size_t j = 0; j <= 8; ++j) ks.push_back(j * period_steps / 8);
                                     return ks;
                                   }());
    double worst = 0.0;
    for (const auto& f : damped.kept) {
      for (const auto& s : quantum::density(f)) {
        worst = std::max(worst, std::abs(s.rho - packet::density_damped(p, coherent, s.x, f.time)));
      }
    }
    report.checks.push_back(measured("analytic_density", worst, 1e-3, "max |rho_numeric - rho_analytic|, gamma_s = 1"));
  }

  if (p.lambda == 0.0) {
    for (const char* name : {"factorization_exact", "factorization_coupled", "norm_decay", "frequency_invariance"}) {
      report.checks.push_back(skipped(name, "no damping (lambda = 0)"));
    }
    return;
  }

  const Trace factored = run_trace(p, cfg, quantum::DampingMode::factored, period_steps, {period_steps});
  const Trace coupled = run_trace(p, cfg, quantum::DampingMode::coupled, 2 * period_steps, {period_steps});
  const double decay_amp = std::exp(-2.0 * p.lambda * period);
  report.checks.push_back(measured("factorization_exact", max_pointwise(factored.kept[0], ref.kept[1], decay_amp), 1e-12,
                                   "factored run vs undamped run * e^{-2 lambda T}"));
  {
    // The trapezoidal treatment of the damping term couples it to the Hermitian part at O(dt^2);
    // check that order by halving dt.
    const double coarse = max_pointwise(coupled.kept[0], ref.kept[1], decay_amp);
    const Trace fine_ref = run_trace(undamped, cfg, quantum::DampingMode::coupled, 2 * period_steps, {2 * period_steps}, 0.5 * dt);
    const Trace fine = run_trace(p, cfg, quantum::DampingMode::coupled, 2 * period_steps, {2 * period_steps}, 0.5 * dt);
    const double order = std::log2(coarse / max_pointwise(fine.kept[0], fine_ref.kept[0], decay_amp));
    report.checks.push_back(measured("factorization_coupled", std::abs(order - 2.0), 0.25,
                                     fmt::format("|order - 2|, order = {:.3f}, deviation at dt = {:.3e}", order, coarse)));
  }

  double decay = 0.0;
  for (std::size_t k : {period_steps, 2 * period_steps}) {
    decay = std::max(decay, std::abs(coupled.norm[k] / std::exp(-4.0 * p.lambda * coupled.t[k]) - 1.0));
  }
  report.checks.push_back(measured("norm_decay", decay, 1e-3, "|norm / e^{-4 lambda t} - 1| at T and 2T"));

  const double shift = std::abs(crossing_period(coupled) - crossing_period(ref)) / period;
  report.checks.push_back(measured("frequency_invariance", std::isnan(shift) ? 1.0 : shift, 1e-3,
                                   "|period(lambda) - period(0)| / T from <x> zero crossings"));
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

ClassicalSummary cmd_classical(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  const auto traj = classical::fit_physical_amplitudes(cfg.params, cfg.ic);
  const std::size_t intervals = cfg.classical.n_samples - 1;
  const double t_end = cfg.classical.t_end;
  const double out_dt = t_end / static_cast<double>(intervals);
  const auto substeps =
      static_cast<std::size_t>(std::ceil(out_dt / classical::suggested_oracle_step(cfg.params)));
  const auto oracle =
      classical::integrate_x_oracle(cfg.params, cfg.ic, t_end, out_dt / static_cast<double>(substeps), substeps);

  auto file = open_output(out_dir, "classical.csv");
  CsvWriter csv(file);
  csv.header({"t", "x_closed", "x_oracle", "abs_err", "q", "qdot", "qddot", "qdddot"});
  ClassicalSummary summary;
  for (const auto& s : oracle) {
    const double x = classical::reconstruct_x(traj, s.t);
    const auto jet = classical::eval_generator_jet(traj, s.t);
    const double err = std::abs(x - s.x);
    summary.max_abs_err = std::max(summary.max_abs_err, err);
    csv.row({s.t, x, s.x, err, jet.q, jet.qdot, jet.qddot, jet.qdddot});
    ++summary.rows;
  }
  return summary;
}

VerifyReport cmd_verify(const RunConfig& config) {
  VerifyReport report;
  classical_checks(config, report);
  quantum_checks(config, report);
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    const char* status = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIPPED";
    if (c.status == CheckStatus::skipped) {
      out << fmt::format("{:<8} {:<24} {}\n", status, c.name, c.note);
    } else {
      out << fmt::format("{:<8} {:<24} measured={:<12.4e} tolerance={:<9.1e} {}\n", status, c.name, c.measured,
                         c.tolerance, c.note);
    }
  }
  out << (report.all_passed() ? "all checks passed\n" : "some checks FAILED\n");
}

EvolveSummary cmd_evolve(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  const OscillatorParams& p = cfg.params;
  const std::size_t n_steps = cfg.evolution.n_steps;
  const std::size_t sample_every = std::max<std::size_t>(1, n_steps / cfg.snapshots);

  auto obs_file = open_output(out_dir, "observables.csv");
  auto rho_file = open_output(out_dir, "density.csv");
  CsvWriter obs(obs_file);
  CsvWriter rho(rho_file);
  obs.header({"t", "norm", "norm_over_decay", "mean_x", "sigma_numeric"});
  rho.header({"t", "x", "rho_numeric", "rho_analytic"});

  SvgPlot plot;
  plot.title = fmt::format("rho(x,t), m={:g} hbar={:g} omega={:g} lambda={:g} gamma_s={:g}", p.mass, p.hbar, p.omega,
                           p.lambda, cfg.packet.gamma_squeeze);
  plot.x_label = "x";
  plot.y_label = "rho(x,t)";

  EvolveSummary summary;
  const auto final_field = quantum::evolve(
      quantum::init_ground_gaussian(p, cfg.grid, cfg.ic.x0), p, cfg.evolution,
      [&](std::size_t k, const quantum::WaveField& f) {
        const double n = quantum::norm(f);
        obs.row({f.time, n, n / std::exp(-4.0 * p.lambda * f.time), quantum::expectation_x(f), quantum::width_x(f)});
        if (k % sample_every != 0 && k != n_steps) return;
        SvgCurve numeric;
        SvgCurve analytic;
        for (const auto& s : quantum::density(f)) {
          const double ref = packet::density_damped(p, cfg.packet, s.x, f.time);
          rho.row({f.time, s.x, s.rho, ref});
          numeric.x.push_back(s.x);
          numeric.y.push_back(s.rho);
          analytic.x.push_back(s.x);
          analytic.y.push_back(ref);
        }
        // Blue at t = 0 shading to red at the last snapshot.
        const double frac = n_steps ? static_cast<double>(k) / static_cast<double>(n_steps) : 0.0;
        const auto red = static_cast<int>(std::lround(30 + 200 * frac));
        const auto blue = static_cast<int>(std::lround(230 - 200 * frac));
        numeric.color = fmt::format("rgb({},60,{})", red, blue);
        numeric.label = fmt::format("t = {:.3g}", f.time);
        analytic.color = numeric.color;
        analytic.dashed = true;
        plot.curves.push_back(std::move(numeric));
        plot.curves.push_back(std::move(analytic));
        ++summary.snapshots;
      });
  summary.final_norm = quantum::norm(final_field);
  summary.final_mean_x = quantum::expectation_x(final_field);

  if (cfg.output.svg) {
    plot.curves.push_back({"analytic (dashed)", {}, {}, "gray", true});
    auto svg = open_output(out_dir, "fig1.svg");
    svg << render_svg(plot);
  }
  return summary;
}

std::vector<std::pair<std::size_t, double>> cmd_pathint(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  const double t = cfg.pathint.omega_t / cfg.params.omega;
  const auto points =
      propagator::kernel_convergence(cfg.params, t, cfg.pathint.grid, cfg.pathint.slices, cfg.pathint.sample_radius);
  auto file = open_output(out_dir, "kernel_convergence.csv");
  CsvWriter csv(file);
  csv.header({"n_slices", "l2_error"});
  std::vector<std::pair<std::size_t, double>> out;
  for (const auto& pt : points) {
    csv.row({static_cast<double>(pt.n_slices), pt.l2_error});
    out.emplace_back(pt.n_slices, pt.l2_error);
  }
  return out;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Damped quantum oscillator laboratory"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_dir;
  const char* names[] = {"classical", "verify", "evolve", "pathint"};
  const char* help[] = {"closed-form vs integrated classical trajectory (classical.csv)",
                        "run the invariant checks and print a report", "evolve the damped state equation (density.csv, observables.csv, fig1.svg)",
                        "path-integral convergence study (kernel_convergence.csv)"};
  for (int i = 0; i < 4; ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_dir, "output directory (default: $DAMPOSC_OUT, then config output.dir, then .)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "damposc: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const RunConfig cfg = load_config(config_path);
    std::filesystem::path dir = out_dir;
    if (dir.empty()) {
      if (const char* env = std::getenv("DAMPOSC_OUT"); env && *env) dir = env;
      else if (!cfg.output.dir.empty()) dir = cfg.output.dir;
      else dir = ".";
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "classical") {
      const auto s = cmd_classical(cfg, dir);
      out << fmt::format("wrote {} rows to {}, max |x_closed - x_oracle| = {:.3e}\n", s.rows,
                         (dir / "classical.csv").string(), s.max_abs_err);
    } else if (cmd == "verify") {
      const auto report = cmd_verify(cfg);
      print_report(report, out);
      return report.all_passed() ? kExitOk : kExitCheckFailed;
    } else if (cmd == "evolve") {
      const auto s = cmd_evolve(cfg, dir);
      out << fmt::format("wrote {} snapshots to {}, final norm = {:.6f}, final <x> = {:.6f}\n", s.snapshots,
                         dir.string(), s.final_norm, s.final_mean_x);
    } else {
      for (const auto& [n, e] : cmd_pathint(cfg, dir)) out << fmt::format("n_slices={:<6} l2_error={:.6e}\n", n, e);
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "damposc: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DegenerateDamping& e) {
    err << "damposc: degenerate damping: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const CausticError& e) {
    err << "damposc: caustic: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "damposc: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace damposc::cli
