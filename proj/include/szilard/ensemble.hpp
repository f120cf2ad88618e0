#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Many-body states of one or two particles in the divided box, and the
// left-occupation-resolved canonical partition functions built from them.

namespace szilard {

enum class StatisticsKind {
  ClassicalDistinguishable,
  BosonSpin0,
  FermionSpinless,
  FermionSpinHalf,
};

std::string to_string(StatisticsKind kind);

/// Inverse of to_string: classical | boson0 | fermion-spinless | fermion-spin-half.
StatisticsKind statistics_from_string(const std::string& name);

struct InteractionModel {
  enum class Kind { None, SameSideContact, SpinSpin };

  Kind kind = Kind::None;
  double v0 = 0.0;  // E1 units; sign convention follows the physical model

  static InteractionModel none() { return {}; }
  static InteractionModel same_side_contact(double v0) { return {Kind::SameSideContact, v0}; }
  static InteractionModel spin_spin(double v0) { return {Kind::SpinSpin, v0}; }

  bool operator==(const InteractionModel&) const = default;
};

std::string to_string(const InteractionModel& inter);

/// Inverse of to_string: none | contact:<v0> | spin:<v0>.
InteractionModel interaction_from_string(const std::string& text);

struct EnsembleSpec {
  StatisticsKind statistics = StatisticsKind::BosonSpin0;
  InteractionModel interaction{};
  int particles = 1;  // 1 or 2

  bool operator==(const EnsembleSpec&) const = default;
};

// Throws std::invalid_argument on unsupported combinations (SpinSpin needs
// spin-1/2 fermions, SameSideContact needs bosons or classical particles,
// interactions need two particles, particles must be 1 or 2).
void validate(const EnsembleSpec& spec);

enum class SpinSector : std::int8_t { NotApplicable = -1, Singlet = 0, Triplet = 1 };

struct ManyBodyState {
  int left_count = 0;              // m: how many particles sit left of the wall
  std::array<int, 2> orbitals{0, 0};  // orbital indices; slot 1 unused for n=1
  SpinSector spin = SpinSector::NotApplicable;
  double energy = 0.0;             // E1 units, interaction shift included
  int degeneracy = 1;
};

struct TruncationOptions {
  double epsilon = 1e-12;        // drop states lighter than this relative to
                                 // the ground state of their m-sector
  int max_orbitals_single = 4000;
  int max_orbitals_pair = 700;
  // Exhaustive small-basis mode: keep every state with orbital indices up to
  // this cutoff and skip the adaptive rule (used to compare against the
  // brute-force oracle on the identical basis).
  std::optional<int> fixed_orbital_cutoff{};
};

struct StateTable {
  EnsembleSpec spec;
  double wall = 0.5;         // l
  double temperature = 1.0;  // t
  TruncationOptions truncation{};
  std::vector<ManyBodyState> states;  // sorted by (m, energy)
  std::vector<double> sector_ground;  // size particles+1, indexed by m
  int max_orbital_left = 0;
  int max_orbital_right = 0;

  double global_ground() const;
};

// Enumerate every thermally relevant state at wall position l and
// temperature t. Classical statistics produce one effective row per m whose
// "energy" -t ln(weight) reproduces the configurational weights.
StateTable enumerate_states(const EnsembleSpec& spec, double wall, double temperature,
                            const TruncationOptions& trunc = {});

// log Z_m with the global ground energy factored out:
//   relative[m] = log( Z_m * exp(+E_ref / t) ),  E_ref = global ground.
// The per-sector ground is subtracted before exponentiation, so nothing
// underflows down to t = 1e-6.
struct LogPartition {
  std::vector<double> relative;
  double reference_energy = 0.0;
  double temperature = 1.0;

  double log_z(int m) const { return relative[m] - reference_energy / temperature; }
  int sectors() const { return static_cast<int>(relative.size()); }
};

LogPartition partition_by_m(const StateTable& table);

/// log p_m; finite for every sector even when exp() would underflow.
std::vector<double> log_occupancy(const StateTable& table);

/// p_m = Z_m / sum Z_m'; sums to 1 within 1e-12.
std::vector<double> occupancy_probabilities(const StateTable& table);

/// S/k_B = -sum over joint states of p ln p, degeneracy g counted g times.
double system_entropy(const StateTable& table);

// True log Z_m(l) for one sector, comparable across wall positions. This is
// what the expansion follows when the wall moves.
double log_sector_partition(const EnsembleSpec& spec, int m, double wall, double temperature,
                            const TruncationOptions& trunc = {});

}  // namespace szilard
