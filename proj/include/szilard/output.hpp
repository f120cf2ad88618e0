#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "szilard/engine.hpp"
#include "szilard/sweep.hpp"

// CSV and JSON serialization. CSV carries `#`-prefixed metadata lines, a
// header naming every column, and 12-significant-digit values in grid order;
// JSON carries the same records plus a `meta` object at full precision.

namespace szilard {

using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string format_significant(double x);  // 12 significant digits

std::string to_csv(const EnginePoint& point, const Metadata& meta);
std::string to_csv(const SweepGrid& grid, const Metadata& meta);
std::string to_csv(const FigureResult& figure, const Metadata& meta);

nlohmann::json to_json(const EnginePoint& point);
nlohmann::json to_json(const SweepGrid& grid);
nlohmann::json to_json(const FigureResult& figure);
std::string to_json_text(const EnginePoint& point, const Metadata& meta);
std::string to_json_text(const SweepGrid& grid, const Metadata& meta);
std::string to_json_text(const FigureResult& figure, const Metadata& meta);

}  // namespace szilard
