#pragma once

#include <string>
#include <vector>

#include "szilard/engine.hpp"

// Command-line front end: point | sweep | figure | wall-demo | verify, with
// flags, an optional `key = value` config file (flags win, unknown keys are
// errors), and CSV/JSON artifacts on disk.

namespace szilard::cli {

struct RunConfig {
  std::string command;  // point | sweep | figure | wall-demo | verify

  std::string stats = "boson0";
  std::string interaction = "none";  // none | contact:<v0> | spin:<v0>
  int particles = 1;
  double r = 0.5;
  double temp = 1.0;
  std::string t_grid;  // "lo:hi:count", log-spaced; empty = default where needed
  std::string r_grid;  // "lo:hi:count", linear
  std::string figure;  // preset name for the figure command
  std::vector<double> demo_v0;  // wall-demo custom barrier strengths

  std::string out;               // output path; empty = stdout (point) or preset name
  std::string format = "auto";   // csv | json | auto (json for point, csv otherwise)

  // numeric overrides
  double trunc_epsilon = 1e-12;
  int max_orbitals_single = 4000;
  int max_orbitals_pair = 700;
  int wall_grid_points = 2001;
  double wall_tolerance = 1e-10;

  std::vector<int> verify_checks;  // empty = all

  bool operator==(const RunConfig&) const = default;
};

/// Parse argv (program name excluded). Throws std::invalid_argument with the
/// offending flag/key and accepted values on bad input.
RunConfig parse_config(const std::vector<std::string>& args);

/// Config-file body (`key = value` lines) reproducing everything but the
/// command word; parse_config({cmd, "--config", file}) round-trips.
std::string serialize_config(const RunConfig& config);

EnsembleSpec ensemble_from(const RunConfig& config);
EngineOptions options_from(const RunConfig& config);

/// Execute the run; writes artifacts, returns the process exit status.
int run(const RunConfig& config);

/// parse + run + error reporting; the main() body of the tool.
int main_entry(int argc, char** argv);

}  // namespace szilard::cli
