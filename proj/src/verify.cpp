#include "szilard/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "szilard/engine.hpp"
#include "szilard/spectrum.hpp"
#include "szilard/sweep.hpp"

namespace szilard::verify {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kTwoThirdsLn3 = 0.7324081924454064;
constexpr double kThirdLn6 = 0.5972531564093516;
constexpr double kPeakEntropy = 0.5623351446188083;  // -(1/4)ln(1/4)-(3/4)ln(3/4)

const EnsembleSpec kOneAtom{StatisticsKind::BosonSpin0, InteractionModel::none(), 1};
const EnsembleSpec kBosons{StatisticsKind::BosonSpin0, InteractionModel::none(), 2};
const EnsembleSpec kFermions{StatisticsKind::FermionSpinless, InteractionModel::none(), 2};
const EnsembleSpec kSpinHalf{StatisticsKind::FermionSpinHalf, InteractionModel::none(), 2};

EnsembleSpec ferromagnet(double v0 = -1.0) {
  return {StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(v0), 2};
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

struct Clauses {
  bool pass = true;
  std::ostringstream detail;
  bool first = true;

  void require(bool ok, const std::string& text) {
    pass &= ok;
    detail << (first ? "" : "; ") << (ok ? "" : "FAILED: ") << text;
    first = false;
  }
  void require_close(const std::string& label, double got, double want, double tol) {
    require(std::abs(got - want) <= tol,
            label + " = " + num(got) + " vs " + num(want) + " (tol " + num(tol) + ")");
  }
  void require_less(const std::string& label, double got, double bound) {
    require(got < bound, label + " = " + num(got) + " < " + num(bound));
  }
};

double ds_at(const EnsembleSpec& spec, double r, double t) {
  return entropy_production(spec, r, t).ds;
}

// Linear interpolation of y(x) on an increasing x column.
double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  auto hi = std::upper_bound(xs.begin(), xs.end(), x);
  if (hi == xs.begin() || hi == xs.end())
    throw std::runtime_error("interpolation target outside the sweep range");
  std::size_t i = static_cast<std::size_t>(hi - xs.begin());
  double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + w * (ys[i] - ys[i - 1]);
}

CheckResult check_single_atom_symmetric() {
  Clauses out;
  for (double t : {1e-3, 1.0, 10.0})
    out.require_close("dS(r=0.5, t=" + num(t) + ")", ds_at(kOneAtom, 0.5, t), kLn2, 1e-6);
  return {1, "single atom at r=1/2 extracts ln 2 at every temperature", out.pass,
          out.detail.str()};
}

CheckResult check_single_atom_third_law() {
  Clauses out;
  for (double r : {0.45, 0.4, 0.35, 0.3}) {
    out.require_less("dS(r=" + num(r) + ", t=1e-3)", ds_at(kOneAtom, r, 1e-3), 1e-3);
    out.require_close("dS(r=" + num(r) + ", t=10)", ds_at(kOneAtom, r, 10.0),
                      classical_binary_entropy(r), 2e-2);
  }
  return {2, "single atom off-center: zero-T limit and classical plateau", out.pass,
          out.detail.str()};
}

CheckResult check_scaling_collapse() {
  Clauses out;
  FigureResult fig = figure_preset("fig2-inset");

  std::vector<std::vector<double>> xs, ys;
  for (const auto& grid : fig.grids) {
    if (grid.error_count() != 0) throw std::runtime_error("collapse sweep had error records");
    xs.push_back(grid.scaled_x);
    ys.push_back(grid.scaled_y);
  }

  double worst_spread = 0.0;
  for (int k = 0; k < 20; ++k) {
    double x = 0.2 + k * (5.0 - 0.2) / 19.0;
    double lo = 1e30, hi = -1e30;
    for (std::size_t c = 0; c < xs.size(); ++c) {
      double y = interpolate(xs[c], ys[c], x);
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
    worst_spread = std::max(worst_spread, hi - lo);
  }
  out.require_less("max spread of dS/dS_cl over 20 matched t/E_sym in [0.2,5]", worst_spread,
                   0.05);

  for (std::size_t c = 0; c < xs.size(); ++c) {
    double crossing = std::nan("");
    for (std::size_t i = 1; i < xs[c].size(); ++i) {
      if ((ys[c][i - 1] - 0.5) * (ys[c][i] - 0.5) <= 0.0 && ys[c][i] != ys[c][i - 1]) {
        double w = (0.5 - ys[c][i - 1]) / (ys[c][i] - ys[c][i - 1]);
        crossing = xs[c][i - 1] + w * (xs[c][i] - xs[c][i - 1]);
        break;
      }
    }
    out.require(crossing >= 0.3 && crossing <= 3.0,
                fig.grids[c].label + " crosses y=1/2 at t/E_sym = " + num(crossing) +
                    " inside [0.3,3]");
  }
  return {3, "single-atom curves collapse when scaled by E_sym and dS_cl", out.pass,
          out.detail.str()};
}

CheckResult check_bosons_residual() {
  Clauses out;
  out.require_close("dS(bosons, r=0.5, t=1e-3)", ds_at(kBosons, 0.5, 1e-3), kTwoThirdsLn3, 1e-3);

  auto grid = default_temperature_grid();
  SweepGrid sweep = temp_sweep(kBosons, 0.45, grid);
  double peak = -1e30;
  for (const auto& p : sweep.points)
    if (p.result) peak = std::max(peak, p.result->ds);
  double low_t = sweep.points.front().result->ds;
  out.require(peak > kLn2, "max dS over the r=0.45 sweep = " + num(peak) + " exceeds ln 2");
  out.require_less("dS(r=0.45) at the low-T end", low_t, 1e-2);
  return {4, "non-interacting bosons: (2/3)ln 3 residual entropy and overshoot", out.pass,
          out.detail.str()};
}

CheckResult check_spinless_fermions() {
  Clauses out;
  out.require_less("dS(fermions, r=0.5, t=1e-3)", ds_at(kFermions, 0.5, 1e-3), 1e-3);
  out.require_close("dS(fermions, r=1/3, t=1e-3)", ds_at(kFermions, 1.0 / 3.0, 1e-3), kLn2,
                    1e-3);
  return {5, "spinless fermions: Pauli-unique ground state vs accidental degeneracy", out.pass,
          out.detail.str()};
}

CheckResult check_contact_interaction() {
  Clauses out;
  EnsembleSpec attractive{StatisticsKind::BosonSpin0, InteractionModel::same_side_contact(-1.0), 2};
  EnsembleSpec repulsive{StatisticsKind::BosonSpin0, InteractionModel::same_side_contact(1.0), 2};
  out.require(ds_at(attractive, 0.5, 1e-3) >= kLn2 - 1e-3,
              "attractive bosons dS(t=1e-3) = " + num(ds_at(attractive, 0.5, 1e-3)) +
                  " >= ln 2 - 1e-3");
  out.require_less("repulsive bosons dS(t=1e-3)", ds_at(repulsive, 0.5, 1e-3), 1e-2);

  auto grid = default_temperature_grid();
  SweepGrid sweep = temp_sweep(
      EnsembleSpec{StatisticsKind::ClassicalDistinguishable, InteractionModel::same_side_contact(-1.0), 2},
      0.5, grid);
  double peak = -1e30;
  for (const auto& p : sweep.points)
    if (p.result) peak = std::max(peak, p.result->ds);
  out.require(peak > kLn2,
              "classical attractive max dS = " + num(peak) + " exceeds ln 2 at intermediate t");
  return {6, "contact interaction at r=1/2: attractive pairing vs repulsive freeze-out", out.pass,
          out.detail.str()};
}

CheckResult check_spin_half_limits() {
  Clauses out;
  out.require_close("dS(no interaction)", ds_at(kSpinHalf, 0.5, 1e-3), kThirdLn6, 1e-3);
  EnsembleSpec afm{StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(1.0), 2};
  out.require_close("dS(antiferromagnetic v0=+1)", ds_at(afm, 0.5, 1e-3), kTwoThirdsLn3, 1e-3);
  out.require_less("dS(ferromagnetic v0=-1)", ds_at(ferromagnet(), 0.5, 1e-3), 1e-3);
  return {7, "spin-1/2 fermions at r=1/2: (1/3)ln 6, (2/3)ln 3, 0", out.pass, out.detail.str()};
}

CheckResult check_ferromagnetic_peak() {
  Clauses out;
  const EnsembleSpec fm = ferromagnet();
  RStarResult loc = find_r_star(-1.0, 0.05);

  auto fine = lin_spaced(0.40, 0.4999, 501);
  SweepGrid sweep = r_sweep(fm, 0.05, fine);
  double peak = -1e30, arg = 0.0;
  for (const auto& p : sweep.points)
    if (p.result && p.result->ds > peak) {
      peak = p.result->ds;
      arg = p.x;
    }
  out.require_close("max dS over r at t=0.05", peak, kLn2, 2e-2);
  out.require(std::abs(arg - loc.r_star) <= 0.01, "argmax r = " + num(arg) +
                                                      " within 0.01 of predicted r* = " +
                                                      num(loc.r_star));
  out.require_close("dS(r_deg, t=1e-3)", ds_at(fm, loc.r_deg, 1e-3), kPeakEntropy, 1e-3);

  double previous = 1e30;
  bool monotone = true;
  std::ostringstream distances;
  for (double t : {0.1, 0.05, 0.01}) {
    auto window = lin_spaced(0.45, 0.49, 161);
    SweepGrid s = r_sweep(fm, t, window);
    double best = -1e30, where = 0.0;
    for (const auto& p : s.points)
      if (p.result && p.result->ds > best) {
        best = p.result->ds;
        where = p.x;
      }
    RStarResult rs = find_r_star(-1.0, t);
    double dist = std::abs(where - loc.r_deg);
    monotone &= dist < previous;
    monotone &= std::abs(where - rs.r_star) <= 5e-4;  // two grid steps
    previous = dist;
    distances << " t=" << num(t) << ": argmax=" << num(where) << " r*=" << num(rs.r_star);
  }
  out.require(monotone, "sweep peak tracks r*(t) and approaches r_deg = " + num(loc.r_deg) +
                            " monotonically:" + distances.str());
  return {8, "ferromagnetic r-sweep: ln 2 peak at r*, degeneracy-point value at r_deg", out.pass,
          out.detail.str()};
}

CheckResult check_low_t_closed_form() {
  Clauses out;
  double worst = 0.0, worst_r = 0.0, worst_t = 0.0;
  for (double t : {0.02, 0.01, 0.005}) {
    for (int k = 0; k <= 12; ++k) {
      double r = 0.44 + k * 0.005;
      double full = ds_at(ferromagnet(), r, t);
      double closed = low_t_fm_prediction(r, -1.0, t).ds;
      if (std::abs(full - closed) > worst) {
        worst = std::abs(full - closed);
        worst_r = r;
        worst_t = t;
      }
    }
  }
  out.require(worst < 1e-3, "max |closed form - full| = " + num(worst) + " at r=" + num(worst_r) +
                                ", t=" + num(worst_t) + " (tol 1e-3)");
  return {9, "low-T ferromagnetic closed form matches the full engine", out.pass,
          out.detail.str()};
}

struct Draw {
  EnsembleSpec spec;
  double r;
  double t;
};

Draw random_draw(std::mt19937_64& rng, bool for_oracle) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> dyadic(103, 921);

  Draw d;
  d.spec.statistics = static_cast<StatisticsKind>(kind(rng));
  d.spec.particles = (kind(rng) == 0) ? 1 : 2;
  d.spec.interaction = InteractionModel::none();
  if (d.spec.particles == 2) {
    double v0 = (0.2 + 1.8 * uniform(rng)) * (uniform(rng) < 0.5 ? -1.0 : 1.0);
    bool interacting = uniform(rng) < 0.5;
    if (interacting) {
      switch (d.spec.statistics) {
        case StatisticsKind::BosonSpin0:
        case StatisticsKind::ClassicalDistinguishable:
          d.spec.interaction = InteractionModel::same_side_contact(v0);
          break;
        case StatisticsKind::FermionSpinHalf:
          d.spec.interaction = InteractionModel::spin_spin(v0);
          break;
        case StatisticsKind::FermionSpinless:
          break;  // no interaction model defined
      }
    }
  }
  // dyadic r keeps 1-r exact, so the reflection check is not limited by the
  // rounding of 1-(1-r)
  d.r = dyadic(rng) / 1024.0;
  d.t = for_oracle ? std::pow(10.0, -1.3 + 2.0 * uniform(rng))
                   : std::pow(10.0, -3.0 + 4.0 * uniform(rng));
  return d;
}

// Brute-force reference: naive linear-space sums on a fixed 6-orbital basis
// and a dense scan for the expansion endpoint. Kept free of the log-domain
// machinery on purpose.
namespace oracle {

struct Row {
  int m;
  double energy;
  int degeneracy;
};

std::vector<Row> enumerate(const EnsembleSpec& spec, double l, double t, int cutoff) {
  std::vector<Row> rows;
  auto eL = [&](int n) { return static_cast<double>(n) * n / (l * l); };
  auto eR = [&](int n) { return static_cast<double>(n) * n / ((1 - l) * (1 - l)); };
  const double v0 = spec.interaction.v0;
  const bool contact = spec.interaction.kind == InteractionModel::Kind::SameSideContact;
  const bool spin = spec.interaction.kind == InteractionModel::Kind::SpinSpin;

  if (spec.statistics == StatisticsKind::ClassicalDistinguishable) {
    double w = contact ? v0 : 0.0;
    if (spec.particles == 1) {
      rows.push_back({1, -t * std::log(l), 1});
      rows.push_back({0, -t * std::log(1 - l), 1});
    } else {
      rows.push_back({2, -t * std::log(l * l) + w, 1});
      rows.push_back({1, -t * std::log(2 * l * (1 - l)), 1});
      rows.push_back({0, -t * std::log((1 - l) * (1 - l)) + w, 1});
    }
    return rows;
  }
  if (spec.particles == 1) {
    for (int n = 1; n <= cutoff; ++n) {
      rows.push_back({1, eL(n), 1});
      rows.push_back({0, eR(n), 1});
    }
    return rows;
  }
  for (int i = 1; i <= cutoff; ++i) {
    for (int j = 1; j <= cutoff; ++j) {
      // split pairs
      double base = eL(i) + eR(j);
      if (spec.statistics == StatisticsKind::FermionSpinHalf) {
        rows.push_back({1, base + (spin ? -0.75 * v0 : 0.0), 1});
        rows.push_back({1, base + (spin ? 0.25 * v0 : 0.0), 3});
      } else {
        rows.push_back({1, base, 1});
      }
      if (j < i) continue;
      // same-side pairs, i <= j
      for (int side = 0; side <= 2; side += 2) {
        double e1 = side == 2 ? eL(i) : eR(i);
        double e2 = side == 2 ? eL(j) : eR(j);
        double pair = e1 + e2;
        switch (spec.statistics) {
          case StatisticsKind::BosonSpin0:
            rows.push_back({side, pair + (contact ? v0 : 0.0), 1});
            break;
          case StatisticsKind::FermionSpinless:
            if (j > i) rows.push_back({side, pair, 1});
            break;
          case StatisticsKind::FermionSpinHalf:
            rows.push_back({side, pair + (spin ? -0.75 * v0 : 0.0), 1});
            if (j > i) rows.push_back({side, pair + (spin ? 0.25 * v0 : 0.0), 3});
            break;
          default:
            break;
        }
      }
    }
  }
  return rows;
}

struct SectorSums {
  std::vector<double> z;  // sum exp(-(E - ground)/t) per m
  double ground = 0.0;
};

SectorSums sector_z(const std::vector<Row>& rows, double t, int sectors) {
  SectorSums out;
  out.ground = 1e300;
  for (const auto& r : rows) out.ground = std::min(out.ground, r.energy);
  out.z.assign(sectors, 0.0);
  for (const auto& r : rows) out.z[r.m] += r.degeneracy * std::exp(-(r.energy - out.ground) / t);
  return out;
}

double ds(const EnsembleSpec& spec, double r, double t, int cutoff) {
  const int sectors = spec.particles + 1;
  auto sums = sector_z(enumerate(spec, r, t, cutoff), t, sectors);
  double total = 0.0;
  for (double x : sums.z) total += x;

  double out = 0.0;
  for (int m = 0; m < sectors; ++m) {
    double p = sums.z[m] / total;
    if (p <= 0.0) continue;
    double p_star = 1.0;
    if (m > 0 && m < spec.particles) {
      // dense scan of log Z_m(l) followed by one parabolic refinement
      const int n_scan = 20001;
      auto value_at = [&](double l) {
        auto s = sector_z(enumerate(spec, l, t, cutoff), t, sectors);
        return std::log(s.z[m]) - s.ground / t;
      };
      double best = -1e300;
      int best_i = 1;
      for (int i = 1; i < n_scan; ++i) {
        double value = value_at(static_cast<double>(i) / n_scan);
        if (value > best) {
          best = value;
          best_i = i;
        }
      }
      double l_eq = static_cast<double>(best_i) / n_scan;
      if (best_i > 1 && best_i < n_scan - 1) {
        double fm = value_at(static_cast<double>(best_i - 1) / n_scan);
        double fp = value_at(static_cast<double>(best_i + 1) / n_scan);
        double denom = fm - 2 * best + fp;
        if (denom < 0.0) l_eq += (0.5 * (fm - fp) / denom) / n_scan;
      }
      auto zs = sector_z(enumerate(spec, l_eq, t, cutoff), t, sectors);
      double tot2 = 0.0;
      for (double x : zs.z) tot2 += x;
      p_star = zs.z[m] / tot2;
    }
    out -= p * std::log(p / p_star);
  }
  return out;
}

}  // namespace oracle

CheckResult check_invariants() {
  Clauses out;
  std::mt19937_64 rng(0x5eed5eedULL);

  double worst_norm = 0.0, worst_bound = -1e300, worst_mirror = 0.0;
  for (int k = 0; k < 200; ++k) {
    Draw d = random_draw(rng, false);
    EnginePoint a = entropy_production(d.spec, d.r, d.t);
    EnginePoint b = entropy_production(d.spec, 1.0 - d.r, d.t);
    double norm = 0.0;
    for (double p : a.p) norm += p;
    worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
    worst_bound = std::max(worst_bound, a.ds - a.s_system);
    worst_mirror = std::max(worst_mirror, std::abs(a.ds - b.ds));
  }
  out.require(worst_norm <= 1e-12, "max |sum p_m - 1| = " + num(worst_norm) + " (tol 1e-12)");
  out.require(worst_bound <= 1e-10,
              "max dS - S_system = " + num(worst_bound) + " (bound tol 1e-10)");
  out.require(worst_mirror <= 1e-10,
              "max |dS(r) - dS(1-r)| = " + num(worst_mirror) + " (tol 1e-10)");

  double worst_oracle = 0.0;
  TruncationOptions small_basis;
  small_basis.fixed_orbital_cutoff = 6;
  EngineOptions options;
  options.truncation = small_basis;
  for (int k = 0; k < 40; ++k) {
    Draw d = random_draw(rng, true);
    double main_ds = entropy_production(d.spec, d.r, d.t, options).ds;
    double ref = oracle::ds(d.spec, d.r, d.t, 6);
    worst_oracle = std::max(worst_oracle, std::abs(main_ds - ref));
  }
  out.require(worst_oracle <= 1e-8,
              "max |dS - brute force| on 6-orbital bases = " + num(worst_oracle) + " (tol 1e-8)");
  return {10, "invariants: normalization, entropy bound, reflection, brute-force oracle",
          out.pass, out.detail.str()};
}

CheckResult check_wall_demo() {
  Clauses out;
  for (double v0 : {10.0, 100.0, 1e4}) {
    double disc = doublet_mixture_equivalence(v0);
    out.require(disc <= 1e-14,
                "mixture discrepancy at v0=" + num(v0) + " is " + num(disc) + " <= 1e-14");
  }
  double previous = 1e300;
  bool decreasing = true;
  for (double v0 : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
    double gap = doublet_splitting(v0);
    decreasing &= gap < previous;
    previous = gap;
  }
  out.require(decreasing, "doublet splitting strictly decreasing over v0 in {0,1,10,100,1000}");
  out.require_less("doublet splitting at v0=1e6", doublet_splitting(1e6), 1e-3);
  auto free_levels = delta_wall_levels({0.0, 6});
  double worst = 0.0;
  for (std::size_t k = 0; k < free_levels.size(); ++k)
    worst = std::max(worst, std::abs(free_levels[k] - static_cast<double>((k + 1) * (k + 1))));
  out.require(worst <= 1e-10, "v0=0 levels match n^2 within " + num(worst) + " (tol 1e-10)");
  return {11, "delta-barrier wall demo: mixture equivalence and doublet limits", out.pass,
          out.detail.str()};
}

}  // namespace

CheckResult run_check(int id) {
  switch (id) {
    case 1: return check_single_atom_symmetric();
    case 2: return check_single_atom_third_law();
    case 3: return check_scaling_collapse();
    case 4: return check_bosons_residual();
    case 5: return check_spinless_fermions();
    case 6: return check_contact_interaction();
    case 7: return check_spin_half_limits();
    case 8: return check_ferromagnetic_peak();
    case 9: return check_low_t_closed_form();
    case 10: return check_invariants();
    case 11: return check_wall_demo();
    default:
      throw std::invalid_argument("unknown check id " + std::to_string(id) +
                                  " (valid: 1..11)");
  }
}

std::vector<CheckResult> run_suite(const std::vector<int>& ids) {
  std::vector<int> order = ids;
  if (order.empty()) {
    order.resize(11);
    for (int i = 0; i < 11; ++i) order[i] = i + 1;
  }
  std::vector<CheckResult> results;
  results.reserve(order.size());
  for (int id : order) {
    try {
      results.push_back(run_check(id));
    } catch (const std::exception& e) {
      results.push_back({id, "check raised an exception", false, e.what()});
    }
  }
  return results;
}

std::string format_line(const CheckResult& result) {
  std::ostringstream out;
  out << (result.pass ? "PASS" : "FAIL") << "  " << result.id << ". " << result.name << ": "
      << result.detail;
  return out.str();
}

}  // namespace szilard::verify
