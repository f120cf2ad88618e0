#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "szilard/engine.hpp"
#include "szilard/ensemble.hpp"
#include "szilard/spectrum.hpp"
#include "szilard/sweep.hpp"
#include "szilard/verify.hpp"

namespace py = pybind11;
using namespace szilard;

namespace {

EnsembleSpec make_spec(const std::string& stats, const std::string& interaction, int particles) {
  EnsembleSpec spec{statistics_from_string(stats), interaction_from_string(interaction),
                    particles};
  validate(spec);
  return spec;
}

std::vector<double> grid_xs(const SweepGrid& grid) {
  std::vector<double> out;
  out.reserve(grid.points.size());
  for (const auto& p : grid.points) out.push_back(p.x);
  return out;
}

std::vector<double> grid_ds(const SweepGrid& grid) {
  std::vector<double> out;
  out.reserve(grid.points.size());
  for (const auto& p : grid.points)
    out.push_back(p.result ? p.result->ds : std::nan(""));
  return out;
}

}  // namespace

PYBIND11_MODULE(_szilard, m) {
  m.doc() = "Szilard-engine simulator: entropy production of one- and two-particle "
            "engines in a divided box";

  // spectrum
  m.def("left_level", &left_level, py::arg("n"), py::arg("r"),
        "n-th level of the left compartment, in E1 units");
  m.def("right_level", &right_level, py::arg("n"), py::arg("r"));
  m.def("e_sym", &e_sym, py::arg("r"), "|E_1^L - E_1^R|");
  m.def("delta_e", &delta_e, py::arg("r"), "min intra-side gap E_2 - E_1");
  m.def(
      "delta_wall_levels",
      [](double v0, int num_levels) { return delta_wall_levels({v0, num_levels}); },
      py::arg("v0"), py::arg("num_levels") = 4,
      "lowest eigenvalues of the box with a central delta barrier");
  m.def("doublet_splitting", &doublet_splitting, py::arg("v0"));
  m.def("doublet_mixture_equivalence", &doublet_mixture_equivalence, py::arg("v0"),
        "max entrywise difference between the energy-doublet and left/right mixtures");

  // ensemble
  py::class_<EnsembleSpec>(m, "EnsembleSpec")
      .def(py::init(&make_spec), py::arg("stats") = "boson0", py::arg("interaction") = "none",
           py::arg("particles") = 1)
      .def_property_readonly("stats",
                             [](const EnsembleSpec& s) { return to_string(s.statistics); })
      .def_property_readonly("interaction",
                             [](const EnsembleSpec& s) { return to_string(s.interaction); })
      .def_readonly("particles", &EnsembleSpec::particles)
      .def("__repr__", [](const EnsembleSpec& s) {
        return "EnsembleSpec(stats='" + to_string(s.statistics) + "', interaction='" +
               to_string(s.interaction) + "', particles=" + std::to_string(s.particles) + ")";
      });

  m.def(
      "occupancy_probabilities",
      [](const EnsembleSpec& spec, double l, double t) {
        return occupancy_probabilities(enumerate_states(spec, l, t));
      },
      py::arg("spec"), py::arg("l"), py::arg("t"),
      "p_m for m = 0..n with the wall at l");
  m.def(
      "system_entropy",
      [](const EnsembleSpec& spec, double l, double t) {
        return system_entropy(enumerate_states(spec, l, t));
      },
      py::arg("spec"), py::arg("l"), py::arg("t"));
  m.def(
      "state_count",
      [](const EnsembleSpec& spec, double l, double t) {
        return enumerate_states(spec, l, t).states.size();
      },
      py::arg("spec"), py::arg("l"), py::arg("t"),
      "number of thermally relevant states kept by the truncation rule");

  // engine
  py::class_<EnginePoint>(m, "EnginePoint")
      .def_readonly("r", &EnginePoint::r)
      .def_readonly("t", &EnginePoint::t)
      .def_readonly("p", &EnginePoint::p)
      .def_readonly("l_eq", &EnginePoint::l_eq)
      .def_readonly("p_star", &EnginePoint::p_star)
      .def_readonly("ds", &EnginePoint::ds)
      .def_readonly("work", &EnginePoint::work)
      .def_readonly("s_system", &EnginePoint::s_system)
      .def("__repr__", [](const EnginePoint& p) {
        return "EnginePoint(r=" + std::to_string(p.r) + ", t=" + std::to_string(p.t) +
               ", ds=" + std::to_string(p.ds) + ")";
      });

  m.def(
      "entropy_production",
      [](const EnsembleSpec& spec, double r, double t) {
        return entropy_production(spec, r, t);
      },
      py::arg("spec"), py::arg("r"), py::arg("t"));
  m.def(
      "equilibrium_wall",
      [](const EnsembleSpec& spec, int m, double r, double t) {
        return equilibrium_wall(spec, m, r, t);
      },
      py::arg("spec"), py::arg("m"), py::arg("r"), py::arg("t"));
  m.def(
      "p_star",
      [](const EnsembleSpec& spec, double r, double t) { return p_star(spec, r, t); },
      py::arg("spec"), py::arg("r"), py::arg("t"));
  m.def("classical_binary_entropy", &classical_binary_entropy, py::arg("r"));
  m.def(
      "classical_engine",
      [](const std::string& interaction, double r, double t, int particles) {
        return classical_engine(interaction_from_string(interaction), r, t, particles);
      },
      py::arg("interaction"), py::arg("r"), py::arg("t"), py::arg("particles") = 2);
  m.def(
      "low_t_fm_prediction",
      [](double r, double v0, double t) {
        auto out = low_t_fm_prediction(r, v0, t);
        return py::make_tuple(out.p0, out.p1, out.ds);
      },
      py::arg("r"), py::arg("v0"), py::arg("t"),
      "(p0, p1, dS) of the low-temperature ferromagnetic closed form");

  // sweep
  py::class_<SweepGrid>(m, "SweepGrid")
      .def_property_readonly("xs", &grid_xs)
      .def_property_readonly("ds", &grid_ds)
      .def_readonly("label", &SweepGrid::label)
      .def_readonly("scaled_x", &SweepGrid::scaled_x)
      .def_readonly("scaled_ds", &SweepGrid::scaled_y)
      .def_property_readonly("errors", &SweepGrid::error_count);

  py::class_<FigureResult>(m, "FigureResult")
      .def_readonly("name", &FigureResult::name)
      .def_readonly("curves", &FigureResult::grids);

  m.def(
      "temp_sweep",
      [](const EnsembleSpec& spec, double r, const std::vector<double>& t_grid) {
        return temp_sweep(spec, r, t_grid);
      },
      py::arg("spec"), py::arg("r"), py::arg("t_grid"));
  m.def(
      "r_sweep",
      [](const EnsembleSpec& spec, double t, const std::vector<double>& r_grid) {
        return r_sweep(spec, t, r_grid);
      },
      py::arg("spec"), py::arg("t"), py::arg("r_grid"));
  m.def("collapse_transform", &collapse_transform, py::arg("grid"));
  m.def("log_spaced", &log_spaced, py::arg("lo"), py::arg("hi"), py::arg("count"));
  m.def("lin_spaced", &lin_spaced, py::arg("lo"), py::arg("hi"), py::arg("count"));
  m.def("default_temperature_grid", &default_temperature_grid);
  m.def("default_wall_grid", &default_wall_grid);
  m.def(
      "find_r_star",
      [](double v0, double t) {
        auto out = find_r_star(v0, t);
        return py::make_tuple(out.r_star, out.r_deg);
      },
      py::arg("v0"), py::arg("t"), "(r_star, r_deg) of the ferromagnetic engine");
  m.def("figure_preset", [](const std::string& name) { return figure_preset(name); },
        py::arg("name"));
  m.def("figure_preset_names", [] { return figure_preset_names(); });

  m.def(
      "verify",
      [](const std::vector<int>& ids) {
        py::list out;
        for (const auto& check : verify::run_suite(ids))
          out.append(py::make_tuple(check.id, check.name, check.pass, check.detail));
        return out;
      },
      py::arg("ids") = std::vector<int>{},
      "run the built-in verification suite; returns (id, name, pass, detail) tuples");
}
