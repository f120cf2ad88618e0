#include "szilard/output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace szilard {

namespace {

const char* axis_name(SweepAxis axis) {
  return axis == SweepAxis::Temperature ? "t" : "r";
}

std::string sanitize(std::string text) {
  for (char& c : text)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return text;
}

void write_meta(std::ostringstream& out, const Metadata& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << " = " << value << "\n";
}

void append_point_columns(std::ostringstream& header, const EnginePoint& sample) {
  header << "dS,work,S_system";
  for (std::size_t m = 0; m < sample.p.size(); ++m) header << ",p_" << m;
  for (std::size_t m = 0; m < sample.p_star.size(); ++m) header << ",p_star_" << m;
  for (std::size_t m = 0; m < sample.l_eq.size(); ++m) header << ",l_eq_" << m;
}

void append_point_values(std::ostringstream& out, const EnginePoint& point) {
  out << format_significant(point.ds) << ',' << format_significant(point.work) << ','
      << format_significant(point.s_system);
  for (double x : point.p) out << ',' << format_significant(x);
  for (double x : point.p_star) out << ',' << format_significant(x);
  for (double x : point.l_eq) out << ',' << format_significant(x);
}

nlohmann::json json_with_meta(nlohmann::json body, const Metadata& meta) {
  nlohmann::json m = nlohmann::json::object();
  for (const auto& [key, value] : meta) m[key] = value;
  body["meta"] = std::move(m);
  return body;
}

}  // namespace

std::string format_significant(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string to_csv(const EnginePoint& point, const Metadata& meta) {
  std::ostringstream out;
  write_meta(out, meta);
  std::ostringstream header;
  header << "r,t,";
  append_point_columns(header, point);
  out << header.str() << "\n";
  out << format_significant(point.r) << ',' << format_significant(point.t) << ',';
  append_point_values(out, point);
  out << "\n";
  return out.str();
}

std::string to_csv(const SweepGrid& grid, const Metadata& meta) {
  std::ostringstream out;
  write_meta(out, meta);
  const EnginePoint* sample = nullptr;
  for (const auto& p : grid.points)
    if (p.result) {
      sample = &*p.result;
      break;
    }
  if (!sample) throw std::runtime_error("sweep produced no successful points");

  std::ostringstream header;
  header << axis_name(grid.axis) << ',';
  append_point_columns(header, *sample);
  if (!grid.scaled_x.empty()) header << ",scaled_" << axis_name(grid.axis) << ",scaled_dS";
  header << ",error";
  out << header.str() << "\n";

  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const auto& p = grid.points[i];
    out << format_significant(p.x) << ',';
    if (p.result) {
      append_point_values(out, *p.result);
    } else {
      const std::size_t fields = 3 + 3 * sample->p.size();
      for (std::size_t k = 0; k < fields; ++k) out << (k ? ",nan" : "nan");
    }
    if (!grid.scaled_x.empty())
      out << ',' << format_significant(grid.scaled_x[i]) << ','
          << format_significant(grid.scaled_y[i]);
    out << ',' << sanitize(p.error) << "\n";
  }
  return out.str();
}

std::string to_csv(const FigureResult& figure, const Metadata& meta) {
  std::ostringstream out;
  write_meta(out, meta);

  if (!figure.wall_demo.empty()) {
    std::size_t levels = figure.wall_demo.front().levels.size();
    out << "v0";
    for (std::size_t k = 1; k <= levels; ++k) out << ",E_" << k;
    out << ",doublet_splitting,mixture_discrepancy\n";
    for (const auto& row : figure.wall_demo) {
      out << format_significant(row.v0);
      for (double e : row.levels) out << ',' << format_significant(e);
      out << ',' << format_significant(row.splitting) << ','
          << format_significant(row.discrepancy) << "\n";
    }
    return out.str();
  }

  if (figure.grids.empty()) throw std::runtime_error("figure preset produced no curves");
  const bool scaled = !figure.grids.front().scaled_x.empty();
  const std::size_t rows = figure.grids.front().points.size();
  for (const auto& grid : figure.grids)
    if (grid.points.size() != rows)
      throw std::runtime_error("figure curves disagree on grid length");

  // one file per figure, one dS column per curve
  std::ostringstream header;
  if (scaled) {
    for (std::size_t g = 0; g < figure.grids.size(); ++g) {
      if (g) header << ',';
      const auto& label = figure.grids[g].label;
      header << "t_" << label << ",scaled_t_" << label << ",scaled_dS_" << label;
    }
  } else {
    header << axis_name(figure.axis);
    for (const auto& grid : figure.grids) header << ",dS_" << grid.label;
  }
  out << header.str() << "\n";

  for (std::size_t i = 0; i < rows; ++i) {
    if (scaled) {
      for (std::size_t g = 0; g < figure.grids.size(); ++g) {
        const auto& grid = figure.grids[g];
        if (g) out << ',';
        out << format_significant(grid.points[i].x) << ','
            << format_significant(grid.scaled_x[i]) << ','
            << format_significant(grid.scaled_y[i]);
      }
    } else {
      out << format_significant(figure.grids.front().points[i].x);
      for (const auto& grid : figure.grids) {
        out << ',';
        if (grid.points[i].result)
          out << format_significant(grid.points[i].result->ds);
        else
          out << "nan";
      }
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json to_json(const EnginePoint& point) {
  return {
      {"r", point.r},
      {"t", point.t},
      {"stats", to_string(point.spec.statistics)},
      {"interaction", to_string(point.spec.interaction)},
      {"particles", point.spec.particles},
      {"p", point.p},
      {"l_eq", point.l_eq},
      {"p_star", point.p_star},
      {"dS", point.ds},
      {"work", point.work},
      {"S_system", point.s_system},
      {"max_orbital", point.max_orbital},
  };
}

nlohmann::json to_json(const SweepGrid& grid) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const auto& p = grid.points[i];
    nlohmann::json rec;
    rec[axis_name(grid.axis)] = p.x;
    if (p.result) {
      rec["dS"] = p.result->ds;
      rec["work"] = p.result->work;
      rec["S_system"] = p.result->s_system;
      rec["p"] = p.result->p;
      rec["p_star"] = p.result->p_star;
      rec["l_eq"] = p.result->l_eq;
    } else {
      rec["error"] = p.error;
    }
    if (!grid.scaled_x.empty()) {
      rec["scaled_x"] = grid.scaled_x[i];
      rec["scaled_dS"] = grid.scaled_y[i];
    }
    points.push_back(std::move(rec));
  }
  return {
      {"stats", to_string(grid.spec.statistics)},
      {"interaction", to_string(grid.spec.interaction)},
      {"particles", grid.spec.particles},
      {"axis", axis_name(grid.axis)},
      {"fixed", grid.fixed},
      {"label", grid.label},
      {"max_orbital", grid.max_orbital},
      {"points", std::move(points)},
  };
}

nlohmann::json to_json(const FigureResult& figure) {
  nlohmann::json out{{"name", figure.name}};
  if (!figure.wall_demo.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : figure.wall_demo)
      rows.push_back({{"v0", row.v0},
                      {"levels", row.levels},
                      {"doublet_splitting", row.splitting},
                      {"mixture_discrepancy", row.discrepancy}});
    out["wall_demo"] = std::move(rows);
    return out;
  }
  nlohmann::json grids = nlohmann::json::array();
  for (const auto& grid : figure.grids) grids.push_back(to_json(grid));
  out["curves"] = std::move(grids);
  return out;
}

std::string to_json_text(const EnginePoint& point, const Metadata& meta) {
  return json_with_meta(to_json(point), meta).dump(2) + "\n";
}

std::string to_json_text(const SweepGrid& grid, const Metadata& meta) {
  return json_with_meta(to_json(grid), meta).dump(2) + "\n";
}

std::string to_json_text(const FigureResult& figure, const Metadata& meta) {
  return json_with_meta(to_json(figure), meta).dump(2) + "\n";
}

}  // namespace szilard
