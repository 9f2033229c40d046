#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "damposc/cli/config.hpp"

namespace damposc::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitCheckFailed = 4;

// classical.csv: closed-form x(t) against the RK4 oracle, plus the generator jet.
struct ClassicalSummary {
  std::size_t rows = 0;
  double max_abs_err = 0.0;
};
ClassicalSummary cmd_classical(const RunConfig& config, const std::filesystem::path& out_dir);

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::skipped;
  std::string note;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool all_passed() const;
};

VerifyReport cmd_verify(const RunConfig& config);
void print_report(const VerifyReport& report, std::ostream& out);

// density.csv, observables.csv and (unless disabled) fig1.svg.
struct EvolveSummary {
  std::size_t snapshots = 0;
  double final_norm = 0.0;
  double final_mean_x = 0.0;
};
EvolveSummary cmd_evolve(const RunConfig& config, const std::filesystem::path& out_dir);

// kernel_convergence.csv.
std::vector<std::pair<std::size_t, double>> cmd_pathint(const RunConfig& config, const std::filesystem::path& out_dir);

// Parses argv, dispatches, and maps library errors onto exit codes.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace damposc::cli
