#pragma once

#include <cstddef>
#include <filesystem>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "damposc/classical.hpp"
#include "damposc/errors.hpp"
#include "damposc/packet.hpp"
#include "damposc/params.hpp"
#include "damposc/quantum.hpp"

namespace damposc::cli {

struct ClassicalSettings {
  double t_end = 0.0;  // default 20 pi / omega
  std::size_t n_samples = 2001;
};

struct PathIntegralSettings {
  double omega_t = 0.25 * std::numbers::pi;
  quantum::Grid1D grid{-10.0, 10.0, 512};
  std::vector<std::size_t> slices{16, 32, 64, 128, 256, 512};
  double sample_radius = 1.0;
};

struct OutputSettings {
  std::string dir;  // empty: fall back to --out, DAMPOSC_OUT, then "."
  bool svg = true;
};

// Deliberate corruption used to exercise failing checks in `verify`.
struct TestHooks {
  double hamiltonian_offset = 0.0;  // added to the coefficient of the q^2 term
};

struct RunConfig {
  OscillatorParams params;
  classical::InitialConditions ic;
  packet::PacketSpec packet;
  quantum::Grid1D grid;
  quantum::EvolutionConfig evolution;
  std::size_t snapshots = 8;
  ClassicalSettings classical;
  PathIntegralSettings pathint;
  OutputSettings output;
  TestHooks hooks;
};

// Carries every problem found, one "path: reason" line each.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> issues);
  [[nodiscard]] const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  std::vector<std::string> issues_;
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace damposc::cli
