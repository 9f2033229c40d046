#include "damposc/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace damposc::cli {

namespace {

using nlohmann::json;

std::string join_issues(const std::vector<std::string>& issues) {
  std::string out = "invalid configuration";
  for (const auto& issue : issues) out += "\n  " + issue;
  return out;
}

// Collects problems instead of failing on the first one.
class Reader {
 public:
  explicit Reader(std::vector<std::string>& issues) : issues_(issues) {}

  void reject_unknown(const json& obj, const std::string& prefix, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : obj.items()) {
      bool known = false;
      for (auto name : allowed) known = known || key == name;
      if (!known) issue(prefix + key, "unknown key");
    }
  }

  std::optional<double> number(const json& obj, const std::string& prefix, const char* key, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) issue(prefix + key, "required field missing");
      return std::nullopt;
    }
    if (!it->is_number()) {
      issue(prefix + key, "must be a number");
      return std::nullopt;
    }
    const double value = it->get<double>();
    if (!std::isfinite(value)) {
      issue(prefix + key, "must be finite");
      return std::nullopt;
    }
    return value;
  }

  std::optional<std::size_t> count(const json& obj, const std::string& prefix, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    if (!it->is_number_integer() || it->get<long long>() < 0) {
      issue(prefix + key, "must be a non-negative integer");
      return std::nullopt;
    }
    return static_cast<std::size_t>(it->get<long long>());
  }

  const json* section(const json& root, const char* key) {
    const auto it = root.find(key);
    if (it == root.end()) return nullptr;
    if (!it->is_object()) {
      issue(key, "must be an object");
      return nullptr;
    }
    return &*it;
  }

  void issue(const std::string& path, const std::string& reason) { issues_.push_back(path + ": " + reason); }

 private:
  std::vector<std::string>& issues_;
};

void read_grid(Reader& r, const json& obj, const std::string& prefix, quantum::Grid1D& grid) {
  if (auto v = r.number(obj, prefix, "x_min", false)) grid.x_min = *v;
  if (auto v = r.number(obj, prefix, "x_max", false)) grid.x_max = *v;
  if (auto v = r.count(obj, prefix, "n_points")) grid.n_points = *v;
  if (!(grid.x_min < grid.x_max)) r.issue(prefix + "x_min", "must be smaller than x_max");
  if (grid.n_points < 8) r.issue(prefix + "n_points", "must be at least 8");
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> issues) : Error(join_issues(issues)), issues_(std::move(issues)) {}

RunConfig parse_config(std::string_view text) {
  std::vector<std::string> issues;
  json root;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    root = json::object();
  } else {
    try {
      root = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError({std::string("<document>: malformed JSON: ") + e.what()});
    }
  }
  if (!root.is_object()) throw ConfigError({"<document>: top level must be a JSON object"});

  Reader r(issues);
  r.reject_unknown(root, "", {"mass", "lambda", "omega", "hbar", "x0", "v0", "gamma_squeeze", "grid", "evolution",
                              "classical", "pathint", "output", "test_hooks"});

  RunConfig cfg;
  const auto mass = r.number(root, "", "mass", true);
  const auto lambda = r.number(root, "", "lambda", true);
  const auto omega = r.number(root, "", "omega", true);
  const auto x0 = r.number(root, "", "x0", true);
  const auto v0 = r.number(root, "", "v0", true);
  if (mass && !(*mass > 0.0)) r.issue("mass", "must be positive");
  if (lambda && !(*lambda >= 0.0)) r.issue("lambda", "must be non-negative");
  if (omega && !(*omega > 0.0)) r.issue("omega", "must be positive");
  if (auto v = r.number(root, "", "hbar", false)) {
    if (*v > 0.0) cfg.params.hbar = *v;
    else r.issue("hbar", "must be positive");
  }
  if (auto v = r.number(root, "", "gamma_squeeze", false)) {
    if (*v > 0.0) cfg.packet.gamma_squeeze = *v;
    else r.issue("gamma_squeeze", "must be positive");
  }
  const bool physics_ok = issues.empty() && mass && lambda && omega && x0 && v0;
  if (physics_ok) {
    cfg.params.mass = *mass;
    cfg.params.lambda = *lambda;
    cfg.params.omega = *omega;
    cfg.ic = {*x0, *v0};
    cfg.packet.x0 = *x0;
  }

  if (const json* grid = r.section(root, "grid")) {
    r.reject_unknown(*grid, "grid.", {"x_min", "x_max", "n_points"});
    read_grid(r, *grid, "grid.", cfg.grid);
  }
  if (physics_ok && cfg.grid.x_min < cfg.grid.x_max) {
    const double reach = std::abs(cfg.ic.x0) + 6.0 * packet::max_sigma_x(cfg.params, cfg.packet);
    if (cfg.grid.x_min > -reach || cfg.grid.x_max < reach) {
      r.issue("grid", "must contain |x0| + 6 sigma_max = " + std::to_string(reach) + " on both sides");
    }
  }

  const double omega_value = physics_ok ? cfg.params.omega : 1.0;
  const double period = 2.0 * std::numbers::pi / omega_value;
  cfg.evolution.dt = 1e-3 * period;
  std::optional<std::size_t> n_steps;
  if (const json* evo = r.section(root, "evolution")) {
    r.reject_unknown(*evo, "evolution.", {"dt", "n_steps", "damping_mode", "snapshots"});
    if (auto v = r.number(*evo, "evolution.", "dt", false)) {
      if (*v > 0.0) cfg.evolution.dt = *v;
      else r.issue("evolution.dt", "must be positive");
    }
    n_steps = r.count(*evo, "evolution.", "n_steps");
    if (auto v = r.count(*evo, "evolution.", "snapshots")) {
      if (*v >= 1) cfg.snapshots = *v;
      else r.issue("evolution.snapshots", "must be at least 1");
    }
    if (const auto it = evo->find("damping_mode"); it != evo->end()) {
      if (*it == "coupled") cfg.evolution.damping_mode = quantum::DampingMode::coupled;
      else if (*it == "factored") cfg.evolution.damping_mode = quantum::DampingMode::factored;
      else r.issue("evolution.damping_mode", "must be \"coupled\" or \"factored\"");
    }
  }
  if (physics_ok && cfg.evolution.dt * cfg.params.omega >= quantum::kMaxStepPhase) {
    r.issue("evolution.dt", "dt * omega must be below 0.1");
  }
  cfg.evolution.n_steps = n_steps.value_or(static_cast<std::size_t>(std::llround(period / cfg.evolution.dt)));

  cfg.classical.t_end = 20.0 * std::numbers::pi / omega_value;
  if (const json* cls = r.section(root, "classical")) {
    r.reject_unknown(*cls, "classical.", {"t_end", "n_samples"});
    if (auto v = r.number(*cls, "classical.", "t_end", false)) {
      if (*v > 0.0) cfg.classical.t_end = *v;
      else r.issue("classical.t_end", "must be positive");
    }
    if (auto v = r.count(*cls, "classical.", "n_samples")) {
      if (*v >= 2) cfg.classical.n_samples = *v;
      else r.issue("classical.n_samples", "must be at least 2");
    }
  }

  if (const json* pi = r.section(root, "pathint")) {
    r.reject_unknown(*pi, "pathint.", {"omega_t", "x_min", "x_max", "n_points", "slices", "sample_radius"});
    if (auto v = r.number(*pi, "pathint.", "omega_t", false)) {
      if (*v > 0.0) cfg.pathint.omega_t = *v;
      else r.issue("pathint.omega_t", "must be positive");
    }
    read_grid(r, *pi, "pathint.", cfg.pathint.grid);
    if (auto v = r.number(*pi, "pathint.", "sample_radius", false)) {
      if (*v > 0.0) cfg.pathint.sample_radius = *v;
      else r.issue("pathint.sample_radius", "must be positive");
    }
    if (const auto it = pi->find("slices"); it != pi->end()) {
      std::vector<std::size_t> slices;
      bool ok = it->is_array() && !it->empty();
      if (ok) {
        for (const auto& s : *it) {
          if (!s.is_number_integer() || s.get<long long>() < 1) ok = false;
          else slices.push_back(static_cast<std::size_t>(s.get<long long>()));
        }
      }
      if (ok) cfg.pathint.slices = std::move(slices);
      else r.issue("pathint.slices", "must be a non-empty array of positive integers");
    }
  }

  if (const json* out = r.section(root, "output")) {
    r.reject_unknown(*out, "output.", {"dir", "svg"});
    if (const auto it = out->find("dir"); it != out->end()) {
      if (it->is_string()) cfg.output.dir = it->get<std::string>();
      else r.issue("output.dir", "must be a string");
    }
    if (const auto it = out->find("svg"); it != out->end()) {
      if (it->is_boolean()) cfg.output.svg = it->get<bool>();
      else r.issue("output.svg", "must be a boolean");
    }
  }

  if (const json* hooks = r.section(root, "test_hooks")) {
    r.reject_unknown(*hooks, "test_hooks.", {"hamiltonian_offset"});
    if (auto v = r.number(*hooks, "test_hooks.", "hamiltonian_offset", false)) cfg.hooks.hamiltonian_offset = *v;
  }

  if (!issues.empty()) throw ConfigError(std::move(issues));
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"config: cannot read " + path.string()});
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace damposc::cli
