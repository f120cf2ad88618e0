#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "szilard/ensemble.hpp"

using namespace szilard;

namespace {

const EnsembleSpec kOneAtom{StatisticsKind::BosonSpin0, InteractionModel::none(), 1};
const EnsembleSpec kBosons{StatisticsKind::BosonSpin0, InteractionModel::none(), 2};
const EnsembleSpec kFermions{StatisticsKind::FermionSpinless, InteractionModel::none(), 2};
const EnsembleSpec kSpinHalf{StatisticsKind::FermionSpinHalf, InteractionModel::none(), 2};

// m -> total degeneracy of states within window of the global ground
std::map<int, int> ground_pattern(const StateTable& table, double window = 1e-9) {
  double ground = table.global_ground();
  std::map<int, int> pattern;
  for (const auto& s : table.states)
    if (s.energy <= ground + window) pattern[s.left_count] += s.degeneracy;
  return pattern;
}

}  // namespace

TEST_CASE("unsupported statistics/interaction combinations are rejected") {
  CHECK_THROWS_AS(
      validate({StatisticsKind::BosonSpin0, InteractionModel::spin_spin(1.0), 2}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      validate({StatisticsKind::FermionSpinless, InteractionModel::same_side_contact(1.0), 2}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      validate({StatisticsKind::FermionSpinHalf, InteractionModel::same_side_contact(1.0), 2}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      validate({StatisticsKind::BosonSpin0, InteractionModel::same_side_contact(1.0), 1}),
      std::invalid_argument);
  CHECK_THROWS_AS(validate({StatisticsKind::BosonSpin0, InteractionModel::none(), 3}),
                  std::invalid_argument);
  CHECK_NOTHROW(
      validate({StatisticsKind::ClassicalDistinguishable, InteractionModel::same_side_contact(-1.0), 2}));
}

TEST_CASE("statistics and interaction strings round-trip") {
  for (auto kind : {StatisticsKind::ClassicalDistinguishable, StatisticsKind::BosonSpin0,
                    StatisticsKind::FermionSpinless, StatisticsKind::FermionSpinHalf})
    CHECK(statistics_from_string(to_string(kind)) == kind);
  for (auto inter : {InteractionModel::none(), InteractionModel::same_side_contact(-1.5),
                     InteractionModel::spin_spin(0.25)})
    CHECK(interaction_from_string(to_string(inter)) == inter);
  CHECK_THROWS_AS(statistics_from_string("anyon"), std::invalid_argument);
  CHECK_THROWS_AS(interaction_from_string("contact"), std::invalid_argument);
  CHECK_THROWS_AS(interaction_from_string("spin:abc"), std::invalid_argument);
}

TEST_CASE("single atom at the symmetric point") {
  for (double t : {1e-3, 1.0, 10.0}) {
    StateTable table = enumerate_states(kOneAtom, 0.5, t);
    LogPartition part = partition_by_m(table);
    CHECK(part.relative[0] == part.relative[1]);  // identical sums, bit for bit
    auto p = occupancy_probabilities(table);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("single atom off-center freezes into the wider side") {
  StateTable table = enumerate_states(kOneAtom, 0.3, 1e-3);
  auto p = occupancy_probabilities(table);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));  // m=0: atom on the right
  CHECK(p[1] < 1e-12);
  CHECK(system_entropy(table) < 1e-9);
}

TEST_CASE("partition functions stay finite at t = 1e-6") {
  StateTable table = enumerate_states(kOneAtom, 0.25, 1e-6);
  LogPartition part = partition_by_m(table);
  CHECK(std::isfinite(part.relative[0]));
  CHECK(std::isfinite(part.relative[1]));
  auto p = occupancy_probabilities(table);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two bosons at r=1/2 have a three-fold ground set") {
  StateTable table = enumerate_states(kBosons, 0.5, 1e-4);
  auto pattern = ground_pattern(table);
  CHECK(pattern == std::map<int, int>{{0, 1}, {1, 1}, {2, 1}});
  auto p = occupancy_probabilities(table);
  for (int m = 0; m <= 2; ++m) CHECK(p[m] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(system_entropy(table) == doctest::Approx(std::log(3.0)).epsilon(1e-8));
}

TEST_CASE("spinless fermions: Pauli ground state and the r=1/3 accidental degeneracy") {
  auto symmetric = ground_pattern(enumerate_states(kFermions, 0.5, 1e-3));
  CHECK(symmetric == std::map<int, int>{{1, 1}});

  StateTable table = enumerate_states(kFermions, 1.0 / 3.0, 1e-3);
  auto accidental = ground_pattern(table, 1e-9);
  CHECK(accidental == std::map<int, int>{{0, 1}, {1, 1}});
  CHECK(table.sector_ground[0] == doctest::Approx(11.25).epsilon(1e-12));
  CHECK(table.sector_ground[1] == doctest::Approx(11.25).epsilon(1e-12));
}

TEST_CASE("spin-1/2 fermions: six-fold ground set splitting under spin-spin coupling") {
  auto free_pattern = ground_pattern(enumerate_states(kSpinHalf, 0.5, 1e-3));
  CHECK(free_pattern == std::map<int, int>{{0, 1}, {1, 4}, {2, 1}});
  auto p = occupancy_probabilities(enumerate_states(kSpinHalf, 0.5, 1e-3));
  CHECK(p[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
  CHECK(p[1] == doctest::Approx(4.0 / 6.0).epsilon(1e-9));
  CHECK(p[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-9));

  EnsembleSpec afm{StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(1.0), 2};
  CHECK(ground_pattern(enumerate_states(afm, 0.5, 1e-3)) ==
        std::map<int, int>{{0, 1}, {1, 1}, {2, 1}});  // three singlets

  EnsembleSpec fm{StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(-1.0), 2};
  CHECK(ground_pattern(enumerate_states(fm, 0.5, 1e-3)) ==
        std::map<int, int>{{1, 3}});  // the split triplet
}

TEST_CASE("spin-spin coupling opens exactly v0 between singlet and triplet") {
  const double v0 = 0.7;
  EnsembleSpec spec{StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(v0), 2};
  StateTable table = enumerate_states(spec, 0.37, 3.0);
  int pairs = 0;
  for (const auto& singlet : table.states) {
    if (singlet.spin != SpinSector::Singlet) continue;
    for (const auto& triplet : table.states) {
      if (triplet.spin != SpinSector::Triplet) continue;
      if (triplet.left_count == singlet.left_count && triplet.orbitals == singlet.orbitals) {
        CHECK(triplet.energy - singlet.energy == doctest::Approx(v0).epsilon(1e-12));
        ++pairs;
      }
    }
  }
  CHECK(pairs > 10);
}

TEST_CASE("classical sectors reproduce the configurational weights") {
  EnsembleSpec classical{StatisticsKind::ClassicalDistinguishable, InteractionModel::none(), 2};
  auto p = occupancy_probabilities(enumerate_states(classical, 0.3, 0.7));
  CHECK(p[2] == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(0.42).epsilon(1e-12));
  CHECK(p[0] == doctest::Approx(0.49).epsilon(1e-12));

  EnsembleSpec sticky{StatisticsKind::ClassicalDistinguishable,
                      InteractionModel::same_side_contact(-0.5), 2};
  double t = 0.25;
  auto q = occupancy_probabilities(enumerate_states(sticky, 0.5, t));
  double w = std::exp(0.5 / t);
  double total = 0.5 * w + 0.5;
  CHECK(q[2] == doctest::Approx(0.25 * w / total).epsilon(1e-12));
  CHECK(q[1] == doctest::Approx(0.5 / total).epsilon(1e-12));
}

TEST_CASE("occupancies mirror under l -> 1-l") {
  const EnsembleSpec specs[] = {
      kOneAtom,
      kBosons,
      kFermions,
      kSpinHalf,
      {StatisticsKind::BosonSpin0, InteractionModel::same_side_contact(0.8), 2},
      {StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(-0.6), 2},
      {StatisticsKind::ClassicalDistinguishable, InteractionModel::same_side_contact(1.1), 2},
  };
  for (const auto& spec : specs) {
    for (double l : {0.25, 0.375, 0.4375}) {  // dyadic
      for (double t : {0.05, 1.0}) {
        auto p = occupancy_probabilities(enumerate_states(spec, l, t));
        auto q = occupancy_probabilities(enumerate_states(spec, 1.0 - l, t));
        for (std::size_t m = 0; m < p.size(); ++m)
          CHECK(p[m] == doctest::Approx(q[p.size() - 1 - m]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("system entropy dominates the occupancy entropy") {
  for (double t : {0.05, 0.5, 5.0}) {
    StateTable table = enumerate_states(kBosons, 0.41, t);
    auto p = occupancy_probabilities(table);
    double occupancy_entropy = 0.0;
    for (double x : p)
      if (x > 0) occupancy_entropy -= x * std::log(x);
    CHECK(system_entropy(table) >= occupancy_entropy - 1e-12);
  }
}

TEST_CASE("adaptive truncation keeps exactly the certified orbitals") {
  const double t = 2.0, l = 0.625;
  StateTable table = enumerate_states(kOneAtom, l, t);
  double cut = -t * std::log(table.truncation.epsilon);
  int n_max = table.max_orbital_left;
  double ground = 1.0 / (l * l);
  CHECK(n_max * n_max / (l * l) - ground <= cut);
  CHECK((n_max + 1.0) * (n_max + 1.0) / (l * l) - ground > cut);
}

TEST_CASE("orbital caps fail loudly when the certificate cannot hold") {
  TruncationOptions tight;
  tight.max_orbitals_single = 2;
  CHECK_THROWS_AS(enumerate_states(kOneAtom, 0.5, 50.0, tight), std::runtime_error);
  TruncationOptions pair_cap;
  pair_cap.max_orbitals_pair = 2;
  CHECK_THROWS_AS(enumerate_states(kBosons, 0.5, 100.0, pair_cap), std::runtime_error);
}

TEST_CASE("fixed small-basis mode enumerates the complete basis") {
  TruncationOptions fixed;
  fixed.fixed_orbital_cutoff = 3;
  StateTable table = enumerate_states(kBosons, 0.45, 0.5, fixed);
  // m=2 and m=0: 6 unordered pairs each; m=1: 9 ordered pairs
  CHECK(table.states.size() == 21);
  StateTable spin = enumerate_states(kSpinHalf, 0.45, 0.5, fixed);
  // same side: 6 singlets + 3 triplets each; split: 9 singlets + 9 triplets
  CHECK(spin.states.size() == 2 * 9 + 18);
}

TEST_CASE("states are sorted by energy within each sector") {
  StateTable table = enumerate_states(kSpinHalf, 0.3, 5.0);
  for (std::size_t i = 1; i < table.states.size(); ++i) {
    const auto& a = table.states[i - 1];
    const auto& b = table.states[i];
    if (a.left_count == b.left_count) CHECK(a.energy <= b.energy);
  }
}
