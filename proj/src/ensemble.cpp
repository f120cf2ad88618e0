#include "szilard/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace szilard {

namespace {

void check_wall(double l) {
  if (!(l > 0.0 && l < 1.0)) {
    std::ostringstream msg;
    msg << "wall position must lie strictly inside (0,1), got " << l;
    throw std::domain_error(msg.str());
  }
}

void check_temperature(double t) {
  if (!(t > 0.0)) {
    std::ostringstream msg;
    msg << "temperature must be positive, got " << t;
    throw std::domain_error(msg.str());
  }
}

struct InteractionShifts {
  double contact = 0.0;  // added to every same-side pair
  double singlet = 0.0;  // added to every singlet (spin-1/2 only)
  double triplet = 0.0;  // added to every triplet
};

InteractionShifts shifts_for(const EnsembleSpec& spec) {
  InteractionShifts s;
  switch (spec.interaction.kind) {
    case InteractionModel::Kind::None:
      break;
    case InteractionModel::Kind::SameSideContact:
      s.contact = spec.interaction.v0;
      break;
    case InteractionModel::Kind::SpinSpin:
      // V = v0 (S^2/2 - 3/4): -3v0/4 on S=0, +v0/4 on S=1, every configuration.
      s.singlet = -0.75 * spec.interaction.v0;
      s.triplet = 0.25 * spec.interaction.v0;
      break;
  }
  return s;
}

// Sector-m enumeration context: wall, temperature, per-sector energy cut.
struct SectorScan {
  const EnsembleSpec& spec;
  double l;
  double t;
  TruncationOptions trunc;
  InteractionShifts shift;
  int* max_left;
  int* max_right;

  double level(bool left_side, int n) const {
    double w = left_side ? l : 1.0 - l;
    return static_cast<double>(n) * n / (w * w);
  }

  void note_orbital(bool left_side, int n) const {
    int& slot = left_side ? *max_left : *max_right;
    slot = std::max(slot, n);
  }
};

[[noreturn]] void throw_cap_exceeded(const SectorScan& ctx, int m, int cap) {
  std::ostringstream msg;
  msg << "truncation certificate failed: sector m=" << m << " at l=" << ctx.l
      << ", t=" << ctx.t << " needs more than " << cap
      << " orbitals per side to cover Boltzmann weights down to "
      << ctx.trunc.epsilon << " of the sector ground";
  throw std::runtime_error(msg.str());
}

double sector_ground_energy(const SectorScan& ctx, int m) {
  const auto& spec = ctx.spec;
  if (spec.particles == 1) return ctx.level(m == 1, 1);
  if (m == 1) {
    double base = ctx.level(true, 1) + ctx.level(false, 1);
    if (spec.statistics == StatisticsKind::FermionSpinHalf)
      return base + std::min(ctx.shift.singlet, ctx.shift.triplet);
    return base;
  }
  const bool left = (m == 2);
  const double e1 = ctx.level(left, 1);
  const double e2 = ctx.level(left, 2);
  switch (spec.statistics) {
    case StatisticsKind::BosonSpin0:
      return 2.0 * e1 + ctx.shift.contact;
    case StatisticsKind::FermionSpinless:
      return e1 + e2;
    case StatisticsKind::FermionSpinHalf:
      return std::min(2.0 * e1 + ctx.shift.singlet,
                      e1 + e2 + std::min(ctx.shift.singlet, ctx.shift.triplet));
    case StatisticsKind::ClassicalDistinguishable:
      break;
  }
  throw std::logic_error("sector_ground_energy: unreachable");
}

void append_single_particle_sector(const SectorScan& ctx, int m, std::vector<ManyBodyState>& out) {
  const bool left = (m == 1);
  int cap = ctx.trunc.fixed_orbital_cutoff.value_or(ctx.trunc.max_orbitals_single);
  if (ctx.trunc.fixed_orbital_cutoff) {
    for (int n = 1; n <= cap; ++n) {
      out.push_back({m, {n, 0}, SpinSector::NotApplicable, ctx.level(left, n), 1});
      ctx.note_orbital(left, n);
    }
    return;
  }
  const double cut = ctx.level(left, 1) - ctx.t * std::log(ctx.trunc.epsilon);
  for (int n = 1;; ++n) {
    double e = ctx.level(left, n);
    if (e > cut) break;
    if (n > cap) throw_cap_exceeded(ctx, m, cap);
    out.push_back({m, {n, 0}, SpinSector::NotApplicable, e, 1});
    ctx.note_orbital(left, n);
  }
}

void append_same_side_pairs(const SectorScan& ctx, int m, std::vector<ManyBodyState>& out) {
  const bool left = (m == 2);
  const auto& sh = ctx.shift;
  const auto stats = ctx.spec.statistics;
  const double spin_min = std::min(sh.singlet, sh.triplet);

  auto emit = [&](int i, int j, double base) {
    switch (stats) {
      case StatisticsKind::BosonSpin0:
        out.push_back({m, {i, j}, SpinSector::NotApplicable, base + sh.contact, 1});
        break;
      case StatisticsKind::FermionSpinless:
        if (j > i) out.push_back({m, {i, j}, SpinSector::NotApplicable, base, 1});
        break;
      case StatisticsKind::FermionSpinHalf:
        // equal orbitals: symmetric orbital part, singlet only (Pauli);
        // distinct orbitals: both exchange combinations exist.
        out.push_back({m, {i, j}, SpinSector::Singlet, base + sh.singlet, 1});
        if (j > i) out.push_back({m, {i, j}, SpinSector::Triplet, base + sh.triplet, 3});
        break;
      case StatisticsKind::ClassicalDistinguishable:
        throw std::logic_error("classical statistics use configurational rows");
    }
    ctx.note_orbital(left, j);
  };

  if (ctx.trunc.fixed_orbital_cutoff) {
    int cap = *ctx.trunc.fixed_orbital_cutoff;
    for (int i = 1; i <= cap; ++i)
      for (int j = i; j <= cap; ++j) emit(i, j, ctx.level(left, i) + ctx.level(left, j));
    return;
  }

  const double cut = sector_ground_energy(ctx, m) - ctx.t * std::log(ctx.trunc.epsilon);
  const int cap = ctx.trunc.max_orbitals_pair;
  // lightest admissible state whose lower orbital is i
  auto lightest_with = [&](int i) {
    double ei = ctx.level(left, i);
    switch (stats) {
      case StatisticsKind::BosonSpin0:
        return 2.0 * ei + sh.contact;
      case StatisticsKind::FermionSpinless:
        return ei + ctx.level(left, i + 1);
      case StatisticsKind::FermionSpinHalf:
        return std::min(2.0 * ei + sh.singlet, ei + ctx.level(left, i + 1) + spin_min);
      default:
        return 0.0;
    }
  };
  const double state_min_shift = (stats == StatisticsKind::BosonSpin0) ? sh.contact
                                 : (stats == StatisticsKind::FermionSpinHalf) ? spin_min
                                                                              : 0.0;
  for (int i = 1;; ++i) {
    if (lightest_with(i) > cut) break;
    if (i > cap) throw_cap_exceeded(ctx, m, cap);
    for (int j = i;; ++j) {
      double base = ctx.level(left, i) + ctx.level(left, j);
      if (base + state_min_shift > cut) break;
      if (j > cap) throw_cap_exceeded(ctx, m, cap);
      emit(i, j, base);
    }
  }
  // drop the states pushed above the cut by a sub-minimal shift
  std::erase_if(out, [&](const ManyBodyState& s) { return s.left_count == m && s.energy > cut; });
}

void append_split_pairs(const SectorScan& ctx, std::vector<ManyBodyState>& out) {
  const auto& sh = ctx.shift;
  const auto stats = ctx.spec.statistics;
  const double spin_min = std::min(sh.singlet, sh.triplet);
  const double min_shift = (stats == StatisticsKind::FermionSpinHalf) ? spin_min : 0.0;

  auto emit = [&](int i, int j, double base) {
    if (stats == StatisticsKind::FermionSpinHalf) {
      out.push_back({1, {i, j}, SpinSector::Singlet, base + sh.singlet, 1});
      out.push_back({1, {i, j}, SpinSector::Triplet, base + sh.triplet, 3});
    } else {
      out.push_back({1, {i, j}, SpinSector::NotApplicable, base, 1});
    }
    ctx.note_orbital(true, i);
    ctx.note_orbital(false, j);
  };

  if (ctx.trunc.fixed_orbital_cutoff) {
    int cap = *ctx.trunc.fixed_orbital_cutoff;
    for (int i = 1; i <= cap; ++i)
      for (int j = 1; j <= cap; ++j) emit(i, j, ctx.level(true, i) + ctx.level(false, j));
    return;
  }

  const double cut = sector_ground_energy(ctx, 1) - ctx.t * std::log(ctx.trunc.epsilon);
  const int cap = ctx.trunc.max_orbitals_pair;
  for (int i = 1;; ++i) {
    if (ctx.level(true, i) + ctx.level(false, 1) + min_shift > cut) break;
    if (i > cap) throw_cap_exceeded(ctx, 1, cap);
    for (int j = 1;; ++j) {
      double base = ctx.level(true, i) + ctx.level(false, j);
      if (base + min_shift > cut) break;
      if (j > cap) throw_cap_exceeded(ctx, 1, cap);
      emit(i, j, base);
    }
  }
  std::erase_if(out, [&](const ManyBodyState& s) { return s.left_count == 1 && s.energy > cut; });
}

// Classical particles: kinetic factors cancel in every ratio used downstream,
// so each sector reduces to one row with weight
//   Z_2 : Z_1 : Z_0 = l^2 w : 2 l (1-l) : (1-l)^2 w,  w = exp(-v0/t) on contact,
// encoded as an effective energy -t ln(weight).
void append_classical_sector(const SectorScan& ctx, int m, std::vector<ManyBodyState>& out) {
  const double l = ctx.l;
  const double contact = ctx.shift.contact;
  double energy = 0.0;
  if (ctx.spec.particles == 1) {
    energy = -ctx.t * std::log(m == 1 ? l : 1.0 - l);
  } else if (m == 1) {
    energy = -ctx.t * std::log(2.0 * l * (1.0 - l));
  } else {
    double w = (m == 2) ? l : 1.0 - l;
    energy = -2.0 * ctx.t * std::log(w) + contact;
  }
  out.push_back({m, {0, 0}, SpinSector::NotApplicable, energy, 1});
}

void append_sector(const SectorScan& ctx, int m, std::vector<ManyBodyState>& out) {
  if (ctx.spec.statistics == StatisticsKind::ClassicalDistinguishable) {
    append_classical_sector(ctx, m, out);
  } else if (ctx.spec.particles == 1) {
    append_single_particle_sector(ctx, m, out);
  } else if (m == 1) {
    append_split_pairs(ctx, out);
  } else {
    append_same_side_pairs(ctx, m, out);
  }
}

double log_sum_boltzmann(const std::vector<ManyBodyState>& states, double ground, double t) {
  double sum = 0.0;
  for (const auto& s : states) sum += s.degeneracy * std::exp(-(s.energy - ground) / t);
  return std::log(sum);
}

}  // namespace

std::string to_string(StatisticsKind kind) {
  switch (kind) {
    case StatisticsKind::ClassicalDistinguishable: return "classical";
    case StatisticsKind::BosonSpin0: return "boson0";
    case StatisticsKind::FermionSpinless: return "fermion-spinless";
    case StatisticsKind::FermionSpinHalf: return "fermion-spin-half";
  }
  return "?";
}

std::string to_string(const InteractionModel& inter) {
  std::ostringstream out;
  switch (inter.kind) {
    case InteractionModel::Kind::None: return "none";
    case InteractionModel::Kind::SameSideContact: out << "contact:" << inter.v0; break;
    case InteractionModel::Kind::SpinSpin: out << "spin:" << inter.v0; break;
  }
  return out.str();
}

StatisticsKind statistics_from_string(const std::string& name) {
  if (name == "classical") return StatisticsKind::ClassicalDistinguishable;
  if (name == "boson0") return StatisticsKind::BosonSpin0;
  if (name == "fermion-spinless") return StatisticsKind::FermionSpinless;
  if (name == "fermion-spin-half") return StatisticsKind::FermionSpinHalf;
  throw std::invalid_argument(
      "stats '" + name +
      "' not recognized; accepted: classical, boson0, fermion-spinless, fermion-spin-half");
}

InteractionModel interaction_from_string(const std::string& text) {
  if (text == "none") return InteractionModel::none();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string kind = text.substr(0, colon);
    const std::string value = text.substr(colon + 1);
    char* end = nullptr;
    double v0 = std::strtod(value.c_str(), &end);
    if (end && *end == '\0' && !value.empty()) {
      if (kind == "contact") return InteractionModel::same_side_contact(v0);
      if (kind == "spin") return InteractionModel::spin_spin(v0);
    }
  }
  throw std::invalid_argument("interaction '" + text +
                              "' not recognized; accepted: none, contact:<v0>, spin:<v0>");
}

void validate(const EnsembleSpec& spec) {
  if (spec.particles != 1 && spec.particles != 2)
    throw std::invalid_argument("particle count must be 1 or 2");
  switch (spec.interaction.kind) {
    case InteractionModel::Kind::None:
      return;
    case InteractionModel::Kind::SameSideContact:
      if (spec.particles != 2)
        throw std::invalid_argument("contact interaction needs two particles");
      if (spec.statistics != StatisticsKind::BosonSpin0 &&
          spec.statistics != StatisticsKind::ClassicalDistinguishable)
        throw std::invalid_argument(
            "contact interaction is defined for spin-0 bosons and classical particles only");
      return;
    case InteractionModel::Kind::SpinSpin:
      if (spec.particles != 2)
        throw std::invalid_argument("spin-spin interaction needs two particles");
      if (spec.statistics != StatisticsKind::FermionSpinHalf)
        throw std::invalid_argument("spin-spin interaction needs spin-1/2 fermions");
      return;
  }
  throw std::invalid_argument("unknown interaction kind");
}

double StateTable::global_ground() const {
  return *std::min_element(sector_ground.begin(), sector_ground.end());
}

StateTable enumerate_states(const EnsembleSpec& spec, double wall, double temperature,
                            const TruncationOptions& trunc) {
  validate(spec);
  check_wall(wall);
  check_temperature(temperature);
  if (!(trunc.epsilon > 0.0 && trunc.epsilon < 1.0))
    throw std::invalid_argument("truncation epsilon must lie in (0,1)");

  StateTable table;
  table.spec = spec;
  table.wall = wall;
  table.temperature = temperature;
  table.truncation = trunc;

  SectorScan ctx{spec,  wall, temperature, trunc, shifts_for(spec),
                 &table.max_orbital_left, &table.max_orbital_right};
  for (int m = 0; m <= spec.particles; ++m) append_sector(ctx, m, table.states);

  std::sort(table.states.begin(), table.states.end(), [](const auto& a, const auto& b) {
    return std::tie(a.left_count, a.energy, a.orbitals, a.spin) <
           std::tie(b.left_count, b.energy, b.orbitals, b.spin);
  });

  table.sector_ground.assign(spec.particles + 1, std::numeric_limits<double>::infinity());
  for (const auto& s : table.states)
    table.sector_ground[s.left_count] = std::min(table.sector_ground[s.left_count], s.energy);
  return table;
}

LogPartition partition_by_m(const StateTable& table) {
  const int sectors = table.spec.particles + 1;
  const double t = table.temperature;
  LogPartition part;
  part.reference_energy = table.global_ground();
  part.temperature = t;
  part.relative.assign(sectors, 0.0);

  std::vector<double> sums(sectors, 0.0);
  for (const auto& s : table.states)
    sums[s.left_count] +=
        s.degeneracy * std::exp(-(s.energy - table.sector_ground[s.left_count]) / t);
  for (int m = 0; m < sectors; ++m) {
    if (sums[m] <= 0.0 || !std::isfinite(table.sector_ground[m])) {
      std::ostringstream msg;
      msg << "empty m-sector " << m << " in state table at l=" << table.wall << ", t=" << t;
      throw std::runtime_error(msg.str());
    }
    part.relative[m] =
        -(table.sector_ground[m] - part.reference_energy) / t + std::log(sums[m]);
  }
  return part;
}

std::vector<double> log_occupancy(const StateTable& table) {
  LogPartition part = partition_by_m(table);
  double peak = *std::max_element(part.relative.begin(), part.relative.end());
  double total = 0.0;
  for (double x : part.relative) total += std::exp(x - peak);
  double log_total = peak + std::log(total);
  std::vector<double> out(part.relative.size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = part.relative[m] - log_total;
  return out;
}

std::vector<double> occupancy_probabilities(const StateTable& table) {
  std::vector<double> out = log_occupancy(table);
  for (double& x : out) x = std::exp(x);
  return out;
}

double system_entropy(const StateTable& table) {
  const double t = table.temperature;
  const double ref = table.global_ground();
  double log_total = 0.0;
  {
    double sum = 0.0;
    for (const auto& s : table.states) sum += s.degeneracy * std::exp(-(s.energy - ref) / t);
    log_total = std::log(sum);
  }
  double entropy = 0.0;
  for (const auto& s : table.states) {
    double log_p = -(s.energy - ref) / t - log_total;
    double p = std::exp(log_p);
    if (p > 0.0) entropy -= s.degeneracy * p * log_p;
  }
  return entropy;
}

double log_sector_partition(const EnsembleSpec& spec, int m, double wall, double temperature,
                            const TruncationOptions& trunc) {
  validate(spec);
  check_wall(wall);
  check_temperature(temperature);
  if (m < 0 || m > spec.particles) throw std::domain_error("sector index out of range");

  int dummy_left = 0, dummy_right = 0;
  SectorScan ctx{spec, wall, temperature, trunc, shifts_for(spec), &dummy_left, &dummy_right};
  std::vector<ManyBodyState> states;
  append_sector(ctx, m, states);
  double ground = std::numeric_limits<double>::infinity();
  for (const auto& s : states) ground = std::min(ground, s.energy);
  return -ground / temperature + log_sum_boltzmann(states, ground, temperature);
}

}  // namespace szilard
