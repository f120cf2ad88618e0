#include "szilard/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace szilard {

namespace {

void check_grid(std::span<const double> grid, double lo, double hi, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= lo && grid[i] <= hi)) {
      std::ostringstream msg;
      msg << what << " grid value " << grid[i] << " outside [" << lo << ", " << hi << "]";
      throw std::invalid_argument(msg.str());
    }
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument(std::string(what) + " grid must be strictly increasing");
  }
}

SweepGrid run_sweep(const EnsembleSpec& spec, SweepAxis axis, double fixed,
                    std::span<const double> grid, const EngineOptions& options) {
  SweepGrid out;
  out.spec = spec;
  out.axis = axis;
  out.fixed = fixed;
  out.points.reserve(grid.size());
  for (double x : grid) {
    SweepPoint point;
    point.x = x;
    try {
      double r = (axis == SweepAxis::Temperature) ? fixed : x;
      double t = (axis == SweepAxis::Temperature) ? x : fixed;
      point.result = entropy_production(spec, r, t, options);
      out.max_orbital = std::max(out.max_orbital, point.result->max_orbital);
    } catch (const std::exception& e) {
      point.error = e.what();
    }
    out.points.push_back(std::move(point));
  }
  return out;
}

std::string format_number(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace

std::size_t SweepGrid::error_count() const {
  std::size_t n = 0;
  for (const auto& p : points)
    if (!p.error.empty()) ++n;
  return n;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > lo) || count < 2)
    throw std::invalid_argument("log grid needs 0 < lo < hi and count >= 2");
  std::vector<double> out(count);
  double step = (std::log(hi) - std::log(lo)) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = std::exp(std::log(lo) + i * step);
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> lin_spaced(double lo, double hi, int count) {
  if (!(hi > lo) || count < 2)
    throw std::invalid_argument("linear grid needs lo < hi and count >= 2");
  std::vector<double> out(count);
  double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = lo + i * step;
  out.back() = hi;
  return out;
}

std::vector<double> default_temperature_grid() { return log_spaced(1e-3, 10.0, 121); }

std::vector<double> default_wall_grid() { return lin_spaced(0.005, 0.995, 199); }

SweepGrid temp_sweep(const EnsembleSpec& spec, double r, std::span<const double> t_grid,
                     const EngineOptions& options) {
  check_grid(t_grid, 1e-6, std::numeric_limits<double>::infinity(), "temperature");
  SweepGrid out = run_sweep(spec, SweepAxis::Temperature, r, t_grid, options);
  out.label = "r" + format_number(r);
  return out;
}

SweepGrid r_sweep(const EnsembleSpec& spec, double t, std::span<const double> r_grid,
                  const EngineOptions& options) {
  check_grid(r_grid, std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0), "wall position");
  SweepGrid out = run_sweep(spec, SweepAxis::WallPosition, t, r_grid, options);
  out.label = "t" + format_number(t);
  return out;
}

SweepGrid collapse_transform(SweepGrid grid) {
  if (grid.axis != SweepAxis::Temperature)
    throw std::invalid_argument("collapse needs a temperature sweep");
  if (grid.spec.particles != 1)
    throw std::invalid_argument("collapse is defined for the single-atom engine");
  const double scale = e_sym(grid.fixed);
  if (scale <= 0.0)
    throw std::invalid_argument("collapse undefined at r = 1/2 (E_sym vanishes)");
  const double norm = classical_binary_entropy(grid.fixed);
  grid.scaled_x.assign(grid.points.size(), std::nan(""));
  grid.scaled_y.assign(grid.points.size(), std::nan(""));
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    if (!grid.points[i].result) continue;
    grid.scaled_x[i] = grid.points[i].x / scale;
    grid.scaled_y[i] = grid.points[i].result->ds / norm;
  }
  return grid;
}

RStarResult find_r_star(double v0, double t) {
  if (!(v0 < 0.0)) throw std::domain_error("r_star is defined for ferromagnetic v0 < 0");
  if (!(t > 0.0)) throw std::domain_error("temperature must be positive");

  auto solve = [&](double target) {
    // E_sym is strictly decreasing on (0, 1/2), so the bracket is guaranteed
    // for any target > 0.
    double lo = 1e-8, hi = 0.5 - 1e-14;
    auto f = [&](double r) { return e_sym(r) - target; };
    double flo = f(lo);
    if (!(flo > 0.0) || !(f(hi) < 0.0)) {
      std::ostringstream msg;
      msg << "no root of E_sym(r) = " << target << " inside (0, 1/2)";
      throw std::runtime_error(msg.str());
    }
    while (hi - lo > 1e-13) {
      double mid = 0.5 * (lo + hi);
      if (f(mid) > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  RStarResult out;
  out.r_deg = solve(-v0);
  out.r_star = solve(-v0 + t * std::log(3.0));
  return out;
}

const std::vector<std::string>& figure_preset_names() {
  static const std::vector<std::string> names = {
      "fig2", "fig2-inset", "fig3", "fig3-inset", "fig4",
      "fig4-inset", "fig5", "fig5-inset", "figS2", "wall-demo"};
  return names;
}

FigureResult figure_preset(const std::string& name, const EngineOptions& options) {
  const EnsembleSpec one_atom{StatisticsKind::BosonSpin0, InteractionModel::none(), 1};
  const EnsembleSpec bosons{StatisticsKind::BosonSpin0, InteractionModel::none(), 2};
  const EnsembleSpec fermions{StatisticsKind::FermionSpinless, InteractionModel::none(), 2};
  const EnsembleSpec spin_half{StatisticsKind::FermionSpinHalf, InteractionModel::none(), 2};

  FigureResult fig;
  fig.name = name;
  const auto t_grid = default_temperature_grid();
  const auto r_grid = default_wall_grid();

  auto labeled = [](SweepGrid grid, std::string label) {
    grid.label = std::move(label);
    return grid;
  };

  if (name == "fig2") {
    for (double r : {0.5, 0.45, 0.4, 0.35, 0.3})
      fig.grids.push_back(temp_sweep(one_atom, r, t_grid, options));
  } else if (name == "fig2-inset") {
    // per-r grid so the scaled abscissa t/E_sym covers the collapse window
    for (double r : {0.45, 0.4, 0.35, 0.3}) {
      auto grid = log_spaced(0.05 * e_sym(r), 8.0 * e_sym(r), 121);
      fig.grids.push_back(collapse_transform(temp_sweep(one_atom, r, grid, options)));
    }
  } else if (name == "fig3") {
    for (double r : {0.5, 1.0 / 3.0, 0.25, 0.2})
      fig.grids.push_back(temp_sweep(fermions, r, t_grid, options));
  } else if (name == "fig3-inset") {
    for (double r : {0.5, 0.45, 0.35, 0.25})
      fig.grids.push_back(temp_sweep(bosons, r, t_grid, options));
  } else if (name == "fig4" || name == "fig4-inset") {
    auto classical = [](double v0) {
      return EnsembleSpec{StatisticsKind::ClassicalDistinguishable,
                          InteractionModel::same_side_contact(v0), 2};
    };
    auto boson = [](double v0) {
      return EnsembleSpec{StatisticsKind::BosonSpin0, InteractionModel::same_side_contact(v0), 2};
    };
    const std::pair<EnsembleSpec, std::string> curves[] = {
        {classical(-1.0), "classical_attractive"},
        {classical(+1.0), "classical_repulsive"},
        {boson(-1.0), "boson_attractive"},
        {boson(+1.0), "boson_repulsive"},
    };
    for (const auto& [spec, label] : curves) {
      if (name == "fig4")
        fig.grids.push_back(labeled(temp_sweep(spec, 0.5, t_grid, options), label));
      else
        fig.grids.push_back(labeled(r_sweep(spec, 0.05, r_grid, options), label));
    }
  } else if (name == "fig5" || name == "fig5-inset") {
    auto spin = [](double v0) {
      return EnsembleSpec{StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(v0), 2};
    };
    const std::pair<EnsembleSpec, std::string> curves[] = {
        {spin_half, "none"},
        {spin(-1.0), "ferromagnetic"},
        {spin(+1.0), "antiferromagnetic"},
    };
    for (const auto& [spec, label] : curves) {
      if (name == "fig5")
        fig.grids.push_back(labeled(temp_sweep(spec, 0.5, t_grid, options), label));
      else
        fig.grids.push_back(labeled(r_sweep(spec, 0.05, r_grid, options), label));
    }
  } else if (name == "figS2") {
    // fine grid: the ferromagnetic peak is only a few 1e-3 wide
    auto fine = lin_spaced(0.30, 0.70, 801);
    EnsembleSpec fm{StatisticsKind::FermionSpinHalf, InteractionModel::spin_spin(-1.0), 2};
    for (double t : {0.1, 0.05, 0.01}) fig.grids.push_back(r_sweep(fm, t, fine, options));
  } else if (name == "wall-demo") {
    for (double v0 : {0.0, 1.0, 10.0, 100.0, 1e4, 1e6}) {
      WallDemoRow row;
      row.v0 = v0;
      row.levels = delta_wall_levels({v0, 4});
      row.splitting = row.levels[1] - row.levels[0];
      row.discrepancy = doublet_mixture_equivalence(v0);
      fig.wall_demo.push_back(std::move(row));
    }
  } else {
    std::ostringstream msg;
    msg << "unknown figure preset '" << name << "'; available:";
    for (const auto& known : figure_preset_names()) msg << " " << known;
    throw std::invalid_argument(msg.str());
  }

  fig.axis = (name == "fig4-inset" || name == "fig5-inset" || name == "figS2")
                 ? SweepAxis::WallPosition
                 : SweepAxis::Temperature;
  return fig;
}

}  // namespace szilard
