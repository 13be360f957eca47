#include "rrk/regime/regime.hpp"

#include <cstdio>
#include <stdexcept>

#include "rrk/gaussian/bounds.hpp"
#include "rrk/geometry/parallel.hpp"
#include "rrk/geometry/plot.hpp"

namespace rrk::regime {

char label_code(Label l) {
  switch (l) {
    case Label::Vsi: return 'V';
    case Label::Pdc: return 'P';
    case Label::Both: return 'B';
    case Label::Unknown: return 'U';
  }
  return '?';
}

std::string label_name(Label l) {
  switch (l) {
    case Label::Vsi: return "VSI";
    case Label::Pdc: return "PDC";
    case Label::Both: return "BOTH";
    case Label::Unknown: return "UNKNOWN";
  }
  return "?";
}

RegimeLabel classify_channel(const gauss::ChannelGaussian& ch) {
  const auto v = gauss::vsi_gaussian(ch);
  const auto p = gauss::pdc_gaussian(ch);
  RegimeLabel r;
  r.vsi_slack = v.slack;
  r.pdc_slack_a = p.slack_a;
  r.pdc_slack_b = p.slack_b;
  if (v.holds && p.holds) {
    r.label = Label::Both;
  } else if (v.holds) {
    r.label = Label::Vsi;
  } else if (p.holds) {
    r.label = Label::Pdc;
  }
  return r;
}

namespace {

std::vector<double> axis(Range r, std::size_t n) {
  if (!(r.hi >= r.lo)) throw std::invalid_argument("empty range");
  if (n == 1) return {r.lo};
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  v.back() = r.hi;
  return v;
}

}  // namespace

RegimeGrid regime_grid(double P1, double P2, Range a_range, Range b_range, std::size_t resolution) {
  if (resolution == 0) throw std::invalid_argument("resolution must be >= 1");
  if (b_range.lo < 0) throw std::invalid_argument("b range must be nonnegative");
  RegimeGrid g;
  g.a = axis(a_range, resolution);
  g.b = axis(b_range, resolution);
  g.cells.resize(g.a.size() * g.b.size());
  gauss::ChannelGaussian probe{{0, 0}, 0, P1, P2};
  probe.validate();
  geom::parallel_for(g.b.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < g.a.size(); ++j) {
      gauss::ChannelGaussian ch{{g.a[j], 0}, g.b[i], P1, P2};
      g.cells[i * g.a.size() + j] = classify_channel(ch);
    }
  });
  return g;
}

void write_regime_csv(std::ostream& os, const RegimeGrid& g) {
  char buf[32];
  os << "b\\a";
  for (double a : g.a) {
    std::snprintf(buf, sizeof buf, ",%.12g", a);
    os << buf;
  }
  os << '\n';
  for (std::size_t i = 0; i < g.b.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", g.b[i]);
    os << buf;
    for (std::size_t j = 0; j < g.a.size(); ++j) os << ',' << label_code(g.at(i, j).label);
    os << '\n';
  }
}

std::string regime_svg(const RegimeGrid& g, const std::string& title) {
  std::vector<std::vector<int>> cells(g.b.size(), std::vector<int>(g.a.size()));
  for (std::size_t i = 0; i < g.b.size(); ++i)
    for (std::size_t j = 0; j < g.a.size(); ++j) cells[i][j] = static_cast<int>(g.at(i, j).label);
  geom::HeatmapSpec spec;
  spec.title = title;
  spec.x_label = "a";
  spec.y_label = "b";
  spec.x_lo = g.a.front();
  spec.x_hi = g.a.back();
  spec.y_lo = g.b.front();
  spec.y_hi = g.b.back();
  spec.colors = {"#1f77b4", "#2ca02c", "#9467bd", "#dddddd"};
  spec.names = {"VSI", "PDC", "BOTH", "UNKNOWN"};
  return geom::svg_heatmap(cells, spec);
}

}  // namespace rrk::regime
