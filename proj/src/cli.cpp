#include "szilard/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "szilard/output.hpp"
#include "szilard/sweep.hpp"
#include "szilard/verify.hpp"

namespace szilard::cli {

namespace {

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
};

GridSpec parse_grid_spec(const std::string& text, const char* key) {
  GridSpec spec;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &spec.lo, &spec.hi, &spec.count, &extra) != 3)
    throw std::invalid_argument(std::string(key) + " expects lo:hi:count, got '" + text + "'");
  if (spec.count < 2 || !(spec.hi > spec.lo))
    throw std::invalid_argument(std::string(key) + ": need lo < hi and count >= 2");
  return spec;
}

struct Parser {
  CLI::App app{"Szilard-engine simulator: extractable work and entropy production\n"
               "of one- and two-particle engines across temperature and wall position",
               "szilard"};
  RunConfig cfg;
  std::array<CLI::App*, 5> commands{};

  Parser() {
    app.require_subcommand(1);
    app.set_config("--config", "", "plain-text config file with `key = value` lines");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.get_config_formatter_base()->comment('#');

    app.add_option("--stats", cfg.stats,
                   "particle statistics: classical | boson0 | fermion-spinless | "
                   "fermion-spin-half")
        ->capture_default_str();
    app.add_option("--interaction", cfg.interaction,
                   "interaction model: none | contact:<v0> | spin:<v0> (v0 in E1 units)")
        ->capture_default_str();
    app.add_option("-n,--particles", cfg.particles, "particle count (1 or 2)")
        ->capture_default_str();
    app.add_option("-r,--r", cfg.r, "wall insertion position, fraction of the box")
        ->capture_default_str();
    app.add_option("-t,--temp", cfg.temp, "temperature k_B T / E1")->capture_default_str();
    app.add_option("--t-grid", cfg.t_grid, "log-spaced temperature grid lo:hi:count");
    app.add_option("--r-grid", cfg.r_grid, "linear wall-position grid lo:hi:count");
    app.add_option("--figure", cfg.figure, "figure preset name (see `figure` command)");
    app.add_option("--demo-v0", cfg.demo_v0, "wall-demo barrier strengths (E1*L units)");
    app.add_option("-o,--out", cfg.out,
                   "output path; default: stdout for point, <preset>.<fmt> otherwise "
                   "(under $SZILARD_OUT_DIR when set)");
    app.add_option("--format", cfg.format, "output format: csv | json | auto")
        ->check(CLI::IsMember({"csv", "json", "auto"}))
        ->capture_default_str();
    app.add_option("--trunc-eps", cfg.trunc_epsilon,
                   "relative Boltzmann weight below which states are dropped")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-orbitals-single", cfg.max_orbitals_single,
                   "orbital cap per side, one particle")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-orbitals-pair", cfg.max_orbitals_pair,
                   "orbital cap per side, two particles")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--wall-grid", cfg.wall_grid_points,
                   "bracketing grid points for the expansion endpoint")
        ->check(CLI::Range(3, 2000000))
        ->capture_default_str();
    app.add_option("--wall-tol", cfg.wall_tolerance, "golden-section interval tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--checks", cfg.verify_checks, "verify: subset of check ids (1..11)");

    commands[0] = app.add_subcommand("point", "one engine evaluation at (r, t)");
    commands[1] = app.add_subcommand("sweep", "sweep dS over a temperature or r grid");
    commands[2] = app.add_subcommand("figure", "run a named preset producing one of the standard curve families");
    commands[2]->add_option("name", cfg.figure, "preset name")
        ->check(CLI::IsMember(figure_preset_names()));
    commands[3] = app.add_subcommand("wall-demo",
                                     "delta-barrier insertion demo: spectrum, doublet "
                                     "splitting, energy/left-right mixture equivalence");
    commands[4] = app.add_subcommand("verify",
                                     "run the built-in verification suite against the "
                                     "published limits");
    commands[4]->add_option("ids", cfg.verify_checks, "check ids to run (default: all)");
    // options stay on the main app; let them match after the command word too
    for (auto* sub : commands) sub->fallthrough();
  }

  RunConfig finish() {
    for (auto* sub : commands)
      if (sub->parsed()) cfg.command = sub->get_name();
    return cfg;
  }
};

std::string resolved_format(const RunConfig& cfg) {
  if (cfg.format != "auto") return cfg.format;
  return cfg.command == "point" ? "json" : "csv";
}

std::filesystem::path resolve_output_path(const RunConfig& cfg, const std::string& fallback) {
  if (!cfg.out.empty()) return cfg.out;
  std::filesystem::path name = fallback + "." + resolved_format(cfg);
  if (const char* dir = std::getenv("SZILARD_OUT_DIR"); dir && *dir)
    return std::filesystem::path(dir) / name;
  return name;
}

void write_artifact(const std::filesystem::path& path, const std::string& text) {
  if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

Metadata base_metadata(const RunConfig& cfg) {
  Metadata meta;
  meta.emplace_back("command", cfg.command);
  std::istringstream lines(serialize_config(cfg));
  std::string line;
  while (std::getline(lines, line)) {
    auto eq = line.find(" = ");
    if (eq != std::string::npos) meta.emplace_back(line.substr(0, eq), line.substr(eq + 3));
  }
  return meta;
}

int run_point(const RunConfig& cfg) {
  EnginePoint point = entropy_production(ensemble_from(cfg), cfg.r, cfg.temp, options_from(cfg));
  Metadata meta = base_metadata(cfg);
  meta.emplace_back("max_orbital_used", std::to_string(point.max_orbital));
  std::string text = resolved_format(cfg) == "json" ? to_json_text(point, meta)
                                                    : to_csv(point, meta);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_artifact(cfg.out, text);
    std::cout << "dS = " << format_significant(point.ds)
              << "  work/E1 = " << format_significant(point.work) << "\n";
  }
  return 0;
}

int run_sweep(const RunConfig& cfg) {
  if (!cfg.t_grid.empty() && !cfg.r_grid.empty())
    throw std::invalid_argument("give either --t-grid or --r-grid, not both");
  EnsembleSpec spec = ensemble_from(cfg);
  EngineOptions options = options_from(cfg);

  SweepGrid grid;
  if (!cfg.r_grid.empty()) {
    GridSpec g = parse_grid_spec(cfg.r_grid, "--r-grid");
    grid = r_sweep(spec, cfg.temp, lin_spaced(g.lo, g.hi, g.count), options);
  } else if (!cfg.t_grid.empty()) {
    GridSpec g = parse_grid_spec(cfg.t_grid, "--t-grid");
    grid = temp_sweep(spec, cfg.r, log_spaced(g.lo, g.hi, g.count), options);
  } else {
    grid = temp_sweep(spec, cfg.r, default_temperature_grid(), options);
  }

  Metadata meta = base_metadata(cfg);
  meta.emplace_back("max_orbital_used", std::to_string(grid.max_orbital));
  meta.emplace_back("error_records", std::to_string(grid.error_count()));
  std::string text = resolved_format(cfg) == "json" ? to_json_text(grid, meta)
                                                    : to_csv(grid, meta);
  write_artifact(resolve_output_path(cfg, "sweep"), text);
  return grid.error_count() == 0 ? 0 : 1;
}

int run_figure(const RunConfig& cfg, const std::string& name) {
  if (name.empty())
    throw std::invalid_argument("figure needs a preset name (see --help for the list)");
  FigureResult fig = figure_preset(name, options_from(cfg));

  std::size_t errors = 0;
  int max_orbital = 0;
  for (const auto& grid : fig.grids) {
    errors += grid.error_count();
    max_orbital = std::max(max_orbital, grid.max_orbital);
  }
  Metadata meta = base_metadata(cfg);
  meta.emplace_back("preset", name);
  meta.emplace_back("max_orbital_used", std::to_string(max_orbital));
  meta.emplace_back("error_records", std::to_string(errors));
  std::string text = resolved_format(cfg) == "json" ? to_json_text(fig, meta)
                                                    : to_csv(fig, meta);
  write_artifact(resolve_output_path(cfg, name), text);
  return errors == 0 ? 0 : 1;
}

int run_wall_demo(const RunConfig& cfg) {
  FigureResult fig;
  if (cfg.demo_v0.empty()) {
    fig = figure_preset("wall-demo");
  } else {
    fig.name = "wall-demo";
    for (double v0 : cfg.demo_v0) {
      WallDemoRow row;
      row.v0 = v0;
      row.levels = delta_wall_levels({v0, 4});
      row.splitting = row.levels[1] - row.levels[0];
      row.discrepancy = doublet_mixture_equivalence(v0);
      fig.wall_demo.push_back(std::move(row));
    }
  }
  Metadata meta = base_metadata(cfg);
  std::string text = resolved_format(cfg) == "json" ? to_json_text(fig, meta)
                                                    : to_csv(fig, meta);
  write_artifact(resolve_output_path(cfg, "wall-demo"), text);
  return 0;
}

int run_verify(const RunConfig& cfg) {
  auto results = verify::run_suite(cfg.verify_checks);
  std::size_t failures = 0;
  for (const auto& result : results) {
    std::cout << verify::format_line(result) << "\n";
    if (!result.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
            << " (" << results.size() << " run)\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  Parser parser;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    parser.app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.get_name() + std::string(": ") + e.what());
  }
  RunConfig cfg = parser.finish();
  // fail fast on inconsistent combinations
  ensemble_from(cfg);
  if (!cfg.t_grid.empty()) parse_grid_spec(cfg.t_grid, "--t-grid");
  if (!cfg.r_grid.empty()) parse_grid_spec(cfg.r_grid, "--r-grid");
  for (int id : cfg.verify_checks)
    if (id < 1 || id > 11)
      throw std::invalid_argument("verify check ids must be in 1..11, got " +
                                  std::to_string(id));
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "# szilard run configuration\n";
  out << "stats = " << cfg.stats << "\n";
  out << "interaction = " << cfg.interaction << "\n";
  out << "particles = " << cfg.particles << "\n";
  out << "r = " << format_significant(cfg.r) << "\n";
  out << "temp = " << format_significant(cfg.temp) << "\n";
  if (!cfg.t_grid.empty()) out << "t-grid = " << cfg.t_grid << "\n";
  if (!cfg.r_grid.empty()) out << "r-grid = " << cfg.r_grid << "\n";
  if (!cfg.figure.empty()) out << "figure = " << cfg.figure << "\n";
  if (!cfg.demo_v0.empty()) {
    out << "demo-v0 =";
    for (double v0 : cfg.demo_v0) out << " " << format_significant(v0);
    out << "\n";
  }
  if (!cfg.out.empty()) out << "out = " << cfg.out << "\n";
  out << "format = " << cfg.format << "\n";
  out << "trunc-eps = " << format_significant(cfg.trunc_epsilon) << "\n";
  out << "max-orbitals-single = " << cfg.max_orbitals_single << "\n";
  out << "max-orbitals-pair = " << cfg.max_orbitals_pair << "\n";
  out << "wall-grid = " << cfg.wall_grid_points << "\n";
  out << "wall-tol = " << format_significant(cfg.wall_tolerance) << "\n";
  if (!cfg.verify_checks.empty()) {
    out << "checks =";
    for (int id : cfg.verify_checks) out << " " << id;
    out << "\n";
  }
  return out.str();
}

EnsembleSpec ensemble_from(const RunConfig& cfg) {
  EnsembleSpec spec{statistics_from_string(cfg.stats), interaction_from_string(cfg.interaction),
                    cfg.particles};
  validate(spec);
  return spec;
}

EngineOptions options_from(const RunConfig& cfg) {
  EngineOptions options;
  options.truncation.epsilon = cfg.trunc_epsilon;
  options.truncation.max_orbitals_single = cfg.max_orbitals_single;
  options.truncation.max_orbitals_pair = cfg.max_orbitals_pair;
  options.wall_grid_points = cfg.wall_grid_points;
  options.wall_tolerance = cfg.wall_tolerance;
  return options;
}

int run(const RunConfig& cfg) {
  if (cfg.command == "point") return run_point(cfg);
  if (cfg.command == "sweep") return run_sweep(cfg);
  if (cfg.command == "figure") return run_figure(cfg, cfg.figure);
  if (cfg.command == "wall-demo") return run_wall_demo(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command +
                              "'; accepted: point, sweep, figure, wall-demo, verify");
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Parser parser;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    parser.app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return parser.app.exit(e);
  }
  try {
    RunConfig cfg = parser.finish();
    ensemble_from(cfg);
    return run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace szilard::cli
