// Minimal SVG output for frontiers and categorical heat maps.
#pragma once

#include <string>
#include <vector>

#include "rrk/geometry/frontier.hpp"

namespace rrk::geom {

std::string svg_frontiers(const std::vector<Frontier>& fs, const std::string& title);

struct HeatmapSpec {
  std::string title;
  std::string x_label, y_label;
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  std::vector<std::string> colors;  // one per category
  std::vector<std::string> names;   // legend entries, same order
};

// cells[row][col]; row 0 is drawn at the bottom (y_lo).
std::string svg_heatmap(const std::vector<std::vector<int>>& cells, const HeatmapSpec& spec);

}  // namespace rrk::geom
