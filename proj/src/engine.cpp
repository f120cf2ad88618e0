#include "szilard/engine.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "szilard/spectrum.hpp"

namespace szilard {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct WallSearch {
  const EnsembleSpec& spec;
  int m;
  double t;
  const EngineOptions& options;
  std::vector<double> cache;  // lazy grid values, NaN = unevaluated

  double grid(int i) const {
    return static_cast<double>(i + 1) / (options.wall_grid_points + 1);
  }
  double eval(double l) const {
    return log_sector_partition(spec, m, l, t, options.truncation);
  }
  double at(int i) {
    double& slot = cache[i];
    if (std::isnan(slot)) slot = eval(grid(i));
    return slot;
  }
};

[[noreturn]] void throw_no_interior_maximum(WallSearch& search, double r) {
  std::ostringstream msg;
  msg << "no interior maximum of log Z_" << search.m << "(l) reachable from r=" << r
      << " at t=" << search.t << "; profile:";
  const int n = search.options.wall_grid_points;
  for (int k = 0; k <= 16; ++k) {
    int i = std::min(n - 1, k * (n - 1) / 16);
    msg << " (" << search.grid(i) << ", " << search.at(i) << ")";
  }
  throw std::runtime_error(msg.str());
}

double golden_section_max(const WallSearch& search, double a, double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = search.eval(c);
  double fd = search.eval(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = search.eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = search.eval(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> log_p_star(const EnsembleSpec& spec, double r, double t,
                               const EngineOptions& options, std::vector<double>* l_eq_out,
                               int* max_orbital) {
  const int n = spec.particles;
  std::vector<double> log_ps(n + 1, 0.0);
  std::vector<double> l_eq(n + 1, 0.0);
  l_eq[0] = 0.0;
  l_eq[n] = 1.0;
  for (int m = 1; m < n; ++m) {
    l_eq[m] = equilibrium_wall(spec, m, r, t, options);
    StateTable table = enumerate_states(spec, l_eq[m], t, options.truncation);
    log_ps[m] = log_occupancy(table)[m];
    if (max_orbital)
      *max_orbital = std::max({*max_orbital, table.max_orbital_left, table.max_orbital_right});
  }
  if (l_eq_out) *l_eq_out = std::move(l_eq);
  return log_ps;
}

}  // namespace

double equilibrium_wall(const EnsembleSpec& spec, int m, double r, double t,
                        const EngineOptions& options) {
  validate(spec);
  if (m < 0 || m > spec.particles) throw std::domain_error("left count out of range");
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("insertion position must be in (0,1)");
  if (m == 0) return 0.0;
  if (m == spec.particles) return 1.0;

  const int n = options.wall_grid_points;
  if (n < 3) throw std::invalid_argument("wall grid needs at least 3 points");
  WallSearch search{spec, m, t, options, std::vector<double>(n, std::nan(""))};

  int i = static_cast<int>(std::lround(r * (n + 1))) - 1;
  i = std::clamp(i, 0, n - 1);

  // force direction at the insertion point
  double here = search.at(i);
  double up = (i + 1 < n) ? search.at(i + 1) : kNegInf;
  double down = (i > 0) ? search.at(i - 1) : kNegInf;
  if (up > here || down > here) {
    int dir = (up >= down) ? 1 : -1;
    while (true) {
      int next = i + dir;
      if (next < 0 || next >= n) throw_no_interior_maximum(search, r);
      if (search.at(next) <= search.at(i)) break;
      i = next;
    }
  }

  double a = (i > 0) ? search.grid(i - 1) : 0.5 * search.grid(0);
  double b = (i + 1 < n) ? search.grid(i + 1) : 0.5 * (search.grid(n - 1) + 1.0);
  return golden_section_max(search, a, b, options.wall_tolerance);
}

std::vector<double> p_star(const EnsembleSpec& spec, double r, double t,
                           const EngineOptions& options) {
  std::vector<double> out = log_p_star(spec, r, t, options, nullptr, nullptr);
  for (double& x : out) x = std::exp(x);
  return out;
}

EnginePoint entropy_production(const EnsembleSpec& spec, double r, double t,
                               const EngineOptions& options) {
  EnginePoint point;
  point.r = r;
  point.t = t;
  point.spec = spec;

  StateTable table = enumerate_states(spec, r, t, options.truncation);
  point.max_orbital = std::max(table.max_orbital_left, table.max_orbital_right);
  std::vector<double> log_p = log_occupancy(table);
  std::vector<double> log_ps =
      log_p_star(spec, r, t, options, &point.l_eq, &point.max_orbital);

  const int sectors = spec.particles + 1;
  point.p.resize(sectors);
  point.p_star.resize(sectors);
  point.ds = 0.0;
  for (int m = 0; m < sectors; ++m) {
    point.p[m] = std::exp(log_p[m]);
    point.p_star[m] = std::exp(log_ps[m]);
    if (point.p[m] > 0.0) {
      if (!std::isfinite(log_ps[m])) {
        std::ostringstream msg;
        msg << "protocol inconsistency: p_" << m << " = " << point.p[m]
            << " > 0 but p*_" << m << " = 0 at r=" << r << ", t=" << t;
        throw std::runtime_error(msg.str());
      }
      point.ds -= point.p[m] * (log_p[m] - log_ps[m]);
    }
  }
  point.work = t * point.ds;
  point.s_system = system_entropy(table);
  if (point.ds < -1e-9)
    std::cerr << "warning: negative entropy production dS = " << point.ds << " at r=" << r
              << ", t=" << t << ", " << to_string(spec.statistics) << "\n";
  return point;
}

double classical_binary_entropy(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("insertion position must be in (0,1)");
  return -r * std::log(r) - (1.0 - r) * std::log(1.0 - r);
}

EnginePoint classical_engine(const InteractionModel& interaction, double r, double t,
                             int particles, const EngineOptions& options) {
  EnsembleSpec spec{StatisticsKind::ClassicalDistinguishable, interaction, particles};
  return entropy_production(spec, r, t, options);
}

LowTemperaturePrediction low_t_fm_prediction(double r, double v0, double t) {
  if (!(v0 < 0.0)) throw std::domain_error("ferromagnetic coupling v0 must be negative");
  if (!(t > 0.0)) throw std::domain_error("temperature must be positive");
  double delta = e_sym(r) + v0;
  double x = 3.0 * std::exp(-delta / t);  // triplet weight over singlet weight
  LowTemperaturePrediction out;
  out.p0 = 1.0 / (x + 1.0);
  out.p1 = x / (x + 1.0);
  auto plogp = [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; };
  out.ds = -plogp(out.p0) - plogp(out.p1);
  return out;
}

}  // namespace szilard
