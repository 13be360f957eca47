// Capacity-regime labels over the real (a, b) plane.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rrk/gaussian/channel.hpp"

namespace rrk::regime {

enum class Label { Vsi, Pdc, Both, Unknown };

char label_code(Label l);  // V, P, B, U
std::string label_name(Label l);

struct RegimeLabel {
  Label label = Label::Unknown;
  double vsi_slack = 0;
  double pdc_slack_a = 0;
  double pdc_slack_b = 0;
};

RegimeLabel classify_channel(const gauss::ChannelGaussian& ch);

struct Range {
  double lo = 0;
  double hi = 5;
};

struct RegimeGrid {
  std::vector<double> a;  // columns
  std::vector<double> b;  // rows
  std::vector<RegimeLabel> cells;  // row-major: cells[i * a.size() + j] is (b[i], a[j])

  const RegimeLabel& at(std::size_t row, std::size_t col) const { return cells[row * a.size() + col]; }
};

// resolution points per axis, endpoints included; a resolution of 1 uses lo
// only. Throws std::invalid_argument for empty ranges or a resolution of 0.
RegimeGrid regime_grid(double P1, double P2, Range a_range, Range b_range, std::size_t resolution);

// One CSV row per b value (first column b), one column per a value.
void write_regime_csv(std::ostream& os, const RegimeGrid& g);
std::string regime_svg(const RegimeGrid& g, const std::string& title);

}  // namespace rrk::regime
