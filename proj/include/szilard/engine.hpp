#pragma once

#include <vector>

#include "szilard/ensemble.hpp"

// The Szilard-engine cycle: insertion probabilities p_m, equilibrium wall
// positions of the isothermal expansion, time-reversed probabilities p*_m,
// and the entropy production
//   dS = -sum_m p_m ln(p_m / p*_m),   <W> = t dS   (E1 units).

namespace szilard {

struct EngineOptions {
  TruncationOptions truncation{};
  int wall_grid_points = 2001;   // bracketing grid for the expansion endpoint
  double wall_tolerance = 1e-10; // golden-section interval width
};

struct EnginePoint {
  double r = 0.5;
  double t = 1.0;
  EnsembleSpec spec;
  std::vector<double> p;       // p_m, m = 0..n
  std::vector<double> l_eq;    // expansion endpoint per m
  std::vector<double> p_star;  // p*_m at l_eq[m]
  double ds = 0.0;             // entropy production, k_B units
  double work = 0.0;           // t * ds, E1 units
  double s_system = 0.0;       // system entropy at insertion, k_B units
  int max_orbital = 0;         // truncation certificate summary
};

// Endpoint of the quasi-static isothermal expansion that starts at wall
// position r with m particles on the left. m = 0 and m = n slide to the box
// ends; otherwise the wall follows the sign of d(log Z_m)/dl from r to a
// local maximum (grid bracket, then golden-section refinement).
double equilibrium_wall(const EnsembleSpec& spec, int m, double r, double t,
                        const EngineOptions& options = {});

// p*_m = occupancy of sector m with the wall at l_eq[m]; exactly 1 at the
// boundary sectors.
std::vector<double> p_star(const EnsembleSpec& spec, double r, double t,
                           const EngineOptions& options = {});

EnginePoint entropy_production(const EnsembleSpec& spec, double r, double t,
                               const EngineOptions& options = {});

/// -r ln r - (1-r) ln(1-r): the classical single-atom result, t-independent.
double classical_binary_entropy(double r);

/// Engine point for classical distinguishable particles.
EnginePoint classical_engine(const InteractionModel& interaction, double r, double t,
                             int particles = 2, const EngineOptions& options = {});

// Low-temperature closed form for the ferromagnetic spin-spin engine near
// the singlet/triplet degeneracy: with dE(r) = E_sym(r) + v0 (v0 < 0),
//   p0 = 1/(3 e^{-dE/t} + 1),  p1 = 1 - p0,  dS = -p0 ln p0 - p1 ln p1.
struct LowTemperaturePrediction {
  double p0 = 0.0;
  double p1 = 0.0;
  double ds = 0.0;
};
LowTemperaturePrediction low_t_fm_prediction(double r, double v0, double t);

}  // namespace szilard
