#pragma once

#include <array>
#include <vector>

// Single-particle spectra of a 1D infinite well divided by a wall, plus the
// delta-barrier wall-insertion demonstrator.
//
// Unit convention used throughout the library: energies are measured in
// E1 = h^2/(8 m L^2), the ground-state energy of the undivided box of length
// L; temperatures as t = k_B T / E1; the wall position r as a fraction of L.

namespace szilard {

/// n-th level of the left compartment of width r: n^2 / r^2.
double left_level(int n, double r);

/// n-th level of the right compartment of width 1-r: n^2 / (1-r)^2.
double right_level(int n, double r);

/// Ground-level asymmetry |E_1^L - E_1^R|; vanishes at r = 1/2.
double e_sym(double r);

/// Smaller of the two intra-side gaps E_2 - E_1: min(3/r^2, 3/(1-r)^2).
double delta_e(double r);

struct DeltaWallSpec {
  double v0 = 0.0;     // barrier strength in units of E1 * L
  int num_levels = 4;  // how many eigenvalues to return, >= 2
};

// Eigenvalues of the well with a central delta barrier, ascending.
// Odd-parity levels (node at the center) are exactly 4n^2 for every v0.
// Even-parity levels solve sin(z) + 4 z cos(z) / (pi^2 v0) = 0 with
// E = 4 z^2 / pi^2, one root per interval ((n-1/2)pi, n pi); the bracket is
// guaranteed, so bisection (energy tolerance 1e-12) cannot skip a level.
std::vector<double> delta_wall_levels(const DeltaWallSpec& spec);

/// Gap between the two lowest levels; 3 at v0 = 0, -> 0 as v0 -> infinity.
double doublet_splitting(double v0);

// 2x2 real density matrix in the {ground, first-excited} energy basis of the
// doublet below the barrier.
struct TwoStateDensity {
  std::array<std::array<double, 2>, 2> a{};

  double trace() const { return a[0][0] + a[1][1]; }
  double max_abs_diff(const TwoStateDensity& other) const;
};

/// (|0><0| + |1><1|)/2: what the reservoir prepares on the doublet.
TwoStateDensity doublet_energy_mixture();

/// (|L><L| + |R><R|)/2 with |L,R> = (|0> +- |1>)/sqrt(2), in the energy basis.
TwoStateDensity left_right_mixture();

// Max entrywise difference between the two mixtures above. The equality is
// algebraic, so anything beyond round-off (~1e-16) indicates a bug; v0 only
// asserts the regime where the doublet picture applies.
double doublet_mixture_equivalence(double v0);

}  // namespace szilard
