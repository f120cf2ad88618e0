#include <doctest.h>

#include <cmath>
#include <random>

#include "szilard/engine.hpp"
#include "szilard/ensemble.hpp"

using namespace szilard;

namespace {

struct Draw {
  EnsembleSpec spec;
  double r;
  double t;
};

// dyadic r so that 1-r is exact and reflection checks are not rounding-bound
Draw draw_case(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> numerator(103, 921);

  Draw d;
  d.spec.statistics = static_cast<StatisticsKind>(kind(rng));
  d.spec.particles = (kind(rng) == 0) ? 1 : 2;
  if (d.spec.particles == 2 && uniform(rng) < 0.5) {
    double v0 = (0.2 + 1.8 * uniform(rng)) * (uniform(rng) < 0.5 ? -1.0 : 1.0);
    switch (d.spec.statistics) {
      case StatisticsKind::BosonSpin0:
      case StatisticsKind::ClassicalDistinguishable:
        d.spec.interaction = InteractionModel::same_side_contact(v0);
        break;
      case StatisticsKind::FermionSpinHalf:
        d.spec.interaction = InteractionModel::spin_spin(v0);
        break;
      case StatisticsKind::FermionSpinless:
        break;
    }
  }
  d.r = numerator(rng) / 1024.0;
  d.t = std::pow(10.0, -3.0 + 4.0 * uniform(rng));
  return d;
}

}  // namespace

TEST_CASE("randomized engine invariants") {
  std::mt19937_64 rng(20250811ULL);
  for (int k = 0; k < 60; ++k) {
    Draw d = draw_case(rng);
    CAPTURE(to_string(d.spec.statistics));
    CAPTURE(to_string(d.spec.interaction));
    CAPTURE(d.spec.particles);
    CAPTURE(d.r);
    CAPTURE(d.t);

    EnginePoint a = entropy_production(d.spec, d.r, d.t);
    EnginePoint b = entropy_production(d.spec, 1.0 - d.r, d.t);

    double norm = 0.0;
    for (double p : a.p) norm += p;
    CHECK(std::abs(norm - 1.0) <= 1e-12);
    CHECK(a.ds <= a.s_system + 1e-10);
    CHECK(std::abs(a.ds - b.ds) <= 1e-10);
    CHECK(a.work == d.t * a.ds);
    // mirror maps p_m onto p_{n-m}
    for (std::size_t m = 0; m < a.p.size(); ++m)
      CHECK(a.p[m] == doctest::Approx(b.p[a.p.size() - 1 - m]).epsilon(1e-11));
  }
}

TEST_CASE("log-domain path agrees with naive sums on a shared 6-orbital basis") {
  TruncationOptions fixed;
  fixed.fixed_orbital_cutoff = 6;

  const EnsembleSpec specs[] = {
      {StatisticsKind::BosonSpin0, InteractionModel::none(), 2},
      {StatisticsKind::BosonSpin0, InteractionModel::same_side_contact(-0.9), 2},
      {StatisticsKind::FermionSpinless, InteractionModel::none(), 2},
      {StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(0.8), 2},
      {StatisticsKind::ClassicalDistinguishable, InteractionModel::same_side_contact(1.2), 2},
      {StatisticsKind::BosonSpin0, InteractionModel::none(), 1},
  };
  for (const auto& spec : specs) {
    for (double l : {0.3, 0.52}) {
      for (double t : {0.4, 2.5}) {
        StateTable table = enumerate_states(spec, l, t, fixed);
        auto p = occupancy_probabilities(table);

        // naive reference on the identical state list
        double ground = table.global_ground();
        std::vector<double> z(spec.particles + 1, 0.0);
        for (const auto& s : table.states)
          z[s.left_count] += s.degeneracy * std::exp(-(s.energy - ground) / t);
        double total = 0.0;
        for (double x : z) total += x;
        for (std::size_t m = 0; m < p.size(); ++m)
          CHECK(p[m] == doctest::Approx(z[m] / total).epsilon(1e-10));
      }
    }
  }
}
