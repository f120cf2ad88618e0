#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "szilard/engine.hpp"
#include "szilard/ensemble.hpp"
#include "szilard/spectrum.hpp"

using namespace szilard;

namespace {

constexpr double kLn2 = 0.6931471805599453;

const EnsembleSpec kOneAtom{StatisticsKind::BosonSpin0, InteractionModel::none(), 1};
const EnsembleSpec kBosons{StatisticsKind::BosonSpin0, InteractionModel::none(), 2};
const EnsembleSpec kFermions{StatisticsKind::FermionSpinless, InteractionModel::none(), 2};
const EnsembleSpec kSpinHalf{StatisticsKind::FermionSpinHalf, InteractionModel::none(), 2};

// dense scan + parabolic vertex, independent of the walk/golden-section path
double scanned_wall_maximum(const EnsembleSpec& spec, int m, double t) {
  const int n = 100001;
  auto value = [&](int i) {
    return log_sector_partition(spec, m, static_cast<double>(i) / n, t);
  };
  int best = 1;
  double best_value = value(1);
  for (int i = 2; i < n; ++i) {
    double v = value(i);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double fm = value(best - 1), fp = value(best + 1);
  double denom = fm - 2 * best_value + fp;
  double correction = denom < 0 ? 0.5 * (fm - fp) / denom : 0.0;
  return (best + correction) / n;
}

}  // namespace

TEST_CASE("single atom at r=1/2 extracts exactly ln 2") {
  for (double t : {1e-3, 1.0, 10.0}) {
    EnginePoint point = entropy_production(kOneAtom, 0.5, t);
    CHECK(point.ds == doctest::Approx(kLn2).epsilon(1e-12));
    CHECK(point.p_star[0] == 1.0);
    CHECK(point.p_star[1] == 1.0);
    CHECK(point.l_eq[0] == 0.0);
    CHECK(point.l_eq[1] == 1.0);
    CHECK(point.work == t * point.ds);
  }
}

TEST_CASE("classical binary entropy") {
  CHECK(classical_binary_entropy(0.5) == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(classical_binary_entropy(0.3) == doctest::Approx(0.6108643020548935).epsilon(1e-14));
  CHECK(classical_binary_entropy(0.3) ==
        doctest::Approx(classical_binary_entropy(0.7)).epsilon(1e-14));
  CHECK_THROWS_AS(classical_binary_entropy(0.0), std::domain_error);
}

TEST_CASE("expansion endpoints") {
  CHECK(equilibrium_wall(kOneAtom, 1, 0.3, 1.0) == 1.0);
  CHECK(equilibrium_wall(kOneAtom, 0, 0.3, 1.0) == 0.0);
  // the optimum sits on a plateau flat to machine precision, hence ~1e-7
  CHECK(equilibrium_wall(kBosons, 1, 0.5, 0.1) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(equilibrium_wall(kBosons, 1, 0.3, 0.1) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(equilibrium_wall(kFermions, 1, 1.0 / 3.0, 0.05) ==
        doctest::Approx(scanned_wall_maximum(kFermions, 1, 0.05)).epsilon(1e-6));

  EnsembleSpec classical{StatisticsKind::ClassicalDistinguishable, InteractionModel::none(), 2};
  CHECK(equilibrium_wall(classical, 1, 0.2, 1.0) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK_THROWS_AS(equilibrium_wall(kBosons, 5, 0.5, 1.0), std::domain_error);
}

TEST_CASE("time-reversed probabilities") {
  auto ps = p_star(kSpinHalf, 0.5, 1e-3);
  CHECK(ps[0] == 1.0);
  CHECK(ps[2] == 1.0);
  CHECK(ps[1] == doctest::Approx(4.0 / 6.0).epsilon(1e-9));
}

TEST_CASE("published zero-temperature limits") {
  CHECK(entropy_production(kBosons, 0.5, 1e-3).ds ==
        doctest::Approx(2.0 / 3.0 * std::log(3.0)).epsilon(1e-6));
  CHECK(entropy_production(kSpinHalf, 0.5, 1e-3).ds ==
        doctest::Approx(std::log(6.0) / 3.0).epsilon(1e-6));
  CHECK(entropy_production(kFermions, 0.5, 1e-3).ds < 1e-6);
  CHECK(entropy_production(kFermions, 1.0 / 3.0, 1e-3).ds ==
        doctest::Approx(kLn2).epsilon(1e-6));

  EnsembleSpec afm{StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(1.0), 2};
  CHECK(entropy_production(afm, 0.5, 1e-3).ds ==
        doctest::Approx(2.0 / 3.0 * std::log(3.0)).epsilon(1e-6));
  EnsembleSpec fm{StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(-1.0), 2};
  CHECK(entropy_production(fm, 0.5, 1e-3).ds < 1e-6);
}

TEST_CASE("contact-coupled bosons at r=1/2") {
  EnsembleSpec attractive{StatisticsKind::BosonSpin0, InteractionModel::same_side_contact(-1.0), 2};
  CHECK(entropy_production(attractive, 0.5, 1e-3).ds == doctest::Approx(kLn2).epsilon(1e-6));
  EnsembleSpec repulsive{StatisticsKind::BosonSpin0, InteractionModel::same_side_contact(1.0), 2};
  CHECK(entropy_production(repulsive, 0.5, 1e-3).ds < 1e-6);
}

TEST_CASE("classical engine: one atom matches the binary entropy at every t") {
  for (double t : {0.01, 1.0, 10.0}) {
    EnginePoint point = classical_engine(InteractionModel::none(), 0.35, t, 1);
    CHECK(point.ds == doctest::Approx(classical_binary_entropy(0.35)).epsilon(1e-12));
  }
}

TEST_CASE("classical engine with contact coupling") {
  auto attractive = InteractionModel::same_side_contact(-1.0);
  CHECK(classical_engine(attractive, 0.5, 1e-3).ds == doctest::Approx(kLn2).epsilon(1e-9));
  // molecular-pair regime peaks above ln 2 at intermediate temperature
  CHECK(classical_engine(attractive, 0.5, 1.0 / std::log(4.0)).ds > kLn2 + 1e-3);

  auto repulsive = InteractionModel::same_side_contact(1.0);
  EnginePoint point = classical_engine(repulsive, 0.5, 1e-3);
  CHECK(point.ds < 1e-9);
  CHECK(point.p[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("low-temperature ferromagnetic closed form") {
  auto at_degeneracy = low_t_fm_prediction(0.46898994354043, -1.0, 1e-3);
  CHECK(at_degeneracy.ds == doctest::Approx(0.5623351446188083).epsilon(1e-6));

  // choose v0 so that dE/t = ln 3 exactly: the entropy peaks at ln 2
  double r = 0.45, t = 0.01;
  double v0 = t * std::log(3.0) - e_sym(r);
  auto peak = low_t_fm_prediction(r, v0, t);
  CHECK(peak.p0 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(peak.ds == doctest::Approx(kLn2).epsilon(1e-12));

  auto frozen = low_t_fm_prediction(0.3, -1.0, 1e-3);
  CHECK(frozen.p0 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(frozen.ds < 1e-12);

  CHECK_THROWS_AS(low_t_fm_prediction(0.45, 1.0, 0.01), std::domain_error);
}

TEST_CASE("work bookkeeping and the entropy bound") {
  for (double t : {0.02, 0.8}) {
    EnginePoint point = entropy_production(kBosons, 0.44, t);
    CHECK(point.work == t * point.ds);
    CHECK(point.ds <= point.s_system + 1e-10);
    double total = 0.0;
    for (double p : point.p) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("third-law approach for a non-degenerate ground state") {
  // gaps small enough that neither value underflows to an exact zero
  double cold = entropy_production(kOneAtom, 0.49, 1e-3).ds;
  double warm = entropy_production(kOneAtom, 0.49, 1e-2).ds;
  CHECK(cold < warm);
  CHECK(cold < 1e-2);

  EnsembleSpec fm{StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(-1.0), 2};
  double fm_cold = entropy_production(fm, 0.46, 1e-3).ds;
  double fm_warm = entropy_production(fm, 0.46, 1e-2).ds;
  CHECK(fm_cold < fm_warm);
  CHECK(fm_cold < 1e-2);
}
