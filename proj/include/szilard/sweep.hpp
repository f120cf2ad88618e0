#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "szilard/engine.hpp"
#include "szilard/spectrum.hpp"

// Temperature and wall-position sweeps, the single-atom scaling collapse,
// the ferromagnetic peak locator, and the named figure presets.

namespace szilard {

enum class SweepAxis { Temperature, WallPosition };

struct SweepPoint {
  double x = 0.0;  // t or r, depending on the axis
  std::optional<EnginePoint> result;
  std::string error;  // non-empty when the point failed
};

struct SweepGrid {
  EnsembleSpec spec;
  SweepAxis axis = SweepAxis::Temperature;
  double fixed = 0.5;  // r for temperature sweeps, t for r sweeps
  std::string label;
  std::vector<SweepPoint> points;
  // collapse columns (single-atom temperature sweeps only)
  std::vector<double> scaled_x;  // t / E_sym(r)
  std::vector<double> scaled_y;  // dS / binary entropy of r
  int max_orbital = 0;

  std::size_t error_count() const;
};

std::vector<double> log_spaced(double lo, double hi, int count);
std::vector<double> lin_spaced(double lo, double hi, int count);
std::vector<double> default_temperature_grid();  // 121 points, [1e-3, 10]
std::vector<double> default_wall_grid();         // 199 points, [0.005, 0.995]

SweepGrid temp_sweep(const EnsembleSpec& spec, double r, std::span<const double> t_grid,
                     const EngineOptions& options = {});
SweepGrid r_sweep(const EnsembleSpec& spec, double t, std::span<const double> r_grid,
                  const EngineOptions& options = {});

// Adds the Fig.-2-inset scaling columns to a single-atom temperature sweep
// taken at r != 1/2.
SweepGrid collapse_transform(SweepGrid grid);

// Ferromagnetic spin-spin engine (v0 < 0): r_star solves
// E_sym(r) + v0 = t ln 3 on (0, 1/2) (the dS maximum of the low-T closed
// form); r_deg solves E_sym(r) + v0 = 0 (singlet/triplet degeneracy).
struct RStarResult {
  double r_star = 0.0;
  double r_deg = 0.0;
};
RStarResult find_r_star(double v0, double t);

struct WallDemoRow {
  double v0 = 0.0;
  std::vector<double> levels;
  double splitting = 0.0;
  double discrepancy = 0.0;
};

struct FigureResult {
  std::string name;
  SweepAxis axis = SweepAxis::Temperature;
  std::vector<SweepGrid> grids;
  std::vector<WallDemoRow> wall_demo;  // used by the wall-demo preset only
};

// Named presets for the standard curve families: fig2, fig2-inset, fig3, fig3-inset,
// fig4, fig4-inset, fig5, fig5-inset, figS2, wall-demo.
FigureResult figure_preset(const std::string& name, const EngineOptions& options = {});
const std::vector<std::string>& figure_preset_names();

}  // namespace szilard
