#include <benchmark/benchmark.h>

#include <numbers>

#include "damposc/classical.hpp"
#include "damposc/hamiltonian.hpp"
#include "damposc/propagator.hpp"
#include "damposc/quantum.hpp"

namespace {

using namespace damposc;

const OscillatorParams kFigure{1.0, 0.01, 1.0, 1.0};

void BM_CrankNicolsonStep(benchmark::State& state) {
  const quantum::Grid1D grid{-8.0, 8.0, static_cast<std::size_t>(state.range(0))};
  const quantum::CrankNicolsonStepper stepper(kFigure, grid, {1e-3 * 2 * std::numbers::pi, 1, quantum::DampingMode::coupled});
  auto field = quantum::init_ground_gaussian(kFigure, grid, -1.0);
  for (auto _ : state) {
    stepper.advance(field);
    benchmark::DoNotOptimize(field.values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CrankNicolsonStep)->Arg(512)->Arg(1024)->Arg(4096);

void BM_FigureOnePeriod(benchmark::State& state) {
  const quantum::Grid1D grid{};
  const quantum::EvolutionConfig cfg{1e-3 * 2 * std::numbers::pi, 1000, quantum::DampingMode::coupled};
  const auto start = quantum::init_ground_gaussian(kFigure, grid, -1.0);
  for (auto _ : state) benchmark::DoNotOptimize(quantum::evolve(start, kFigure, cfg, quantum::StepObserver{}));
}
BENCHMARK(BM_FigureOnePeriod)->Unit(benchmark::kMillisecond);

void BM_HamiltonianOnTrajectory(benchmark::State& state) {
  const auto traj = classical::GeneratorTrajectory::from_amplitudes({1.0, 0.4, 1.3, 1.0}, {{{0.3, 0.1}, {0.3, -0.1}, {0.1, -0.2}, {0.1, 0.2}}});
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamiltonian::hamiltonian_on_trajectory(traj, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_HamiltonianOnTrajectory);

void BM_GeneratorJet(benchmark::State& state) {
  const auto traj = classical::fit_physical_amplitudes(kFigure, {-1.0, 0.0});
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classical::eval_generator_jet(traj, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_GeneratorJet);

void BM_SlicedKernel(benchmark::State& state) {
  const OscillatorParams p{1.0, 0.0, 1.0, 1.0};
  for (auto _ : state) {
    const propagator::SlicedKernel k(p, std::numbers::pi / 4, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(k(0.3, -0.5));
  }
}
BENCHMARK(BM_SlicedKernel)->Arg(256)->Arg(4096);

void BM_PropagateByKernel(benchmark::State& state) {
  const OscillatorParams p{1.0, 0.0, 1.0, 1.0};
  const quantum::Grid1D grid{-8.0, 8.0, static_cast<std::size_t>(state.range(0))};
  const auto start = quantum::init_ground_gaussian(p, grid, -1.0);
  for (auto _ : state) benchmark::DoNotOptimize(propagator::propagate_by_kernel(p, start, std::numbers::pi / 2));
}
BENCHMARK(BM_PropagateByKernel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
