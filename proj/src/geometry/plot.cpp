#include "rrk/geometry/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rrk::geom {

namespace {

constexpr double kW = 640, kH = 480, kL = 60, kR = 20, kT = 40, kB = 50;
const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '&': o += "&amp;"; break;
      default: o += c;
    }
  }
  return o;
}

void axes(std::ostringstream& os, double xmax, double ymax, const std::string& xl,
          const std::string& yl) {
  os << "<line x1='" << kL << "' y1='" << kH - kB << "' x2='" << kW - kR << "' y2='" << kH - kB
     << "' stroke='black'/>\n";
  os << "<line x1='" << kL << "' y1='" << kT << "' x2='" << kL << "' y2='" << kH - kB
     << "' stroke='black'/>\n";
  for (int i = 0; i <= 4; ++i) {
    double fx = kL + (kW - kL - kR) * i / 4.0;
    double fy = kH - kB - (kH - kT - kB) * i / 4.0;
    os << "<text x='" << fx << "' y='" << kH - kB + 16 << "' font-size='11' text-anchor='middle'>"
       << num(xmax * i / 4.0) << "</text>\n";
    os << "<text x='" << kL - 6 << "' y='" << fy + 4 << "' font-size='11' text-anchor='end'>"
       << num(ymax * i / 4.0) << "</text>\n";
  }
  os << "<text x='" << (kL + kW - kR) / 2 << "' y='" << kH - 12
     << "' font-size='13' text-anchor='middle'>" << escape(xl) << "</text>\n";
  os << "<text x='16' y='" << (kT + kH - kB) / 2
     << "' font-size='13' text-anchor='middle' transform='rotate(-90 16 " << (kT + kH - kB) / 2
     << ")'>" << escape(yl) << "</text>\n";
}

}  // namespace

std::string svg_frontiers(const std::vector<Frontier>& fs, const std::string& title) {
  double xmax = 0, ymax = 0;
  for (const auto& f : fs) {
    xmax = std::max(xmax, f.r1_max());
    ymax = std::max(ymax, f.r2_max());
  }
  xmax = xmax > 0 ? xmax * 1.05 : 1;
  ymax = ymax > 0 ? ymax * 1.05 : 1;
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  os << "<text x='" << kW / 2 << "' y='24' font-size='15' text-anchor='middle'>" << escape(title)
     << "</text>\n";
  axes(os, xmax, ymax, "R1 [bits]", "R2 [bits]");
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const auto& f = fs[k];
    const char* col = kPalette[k % 6];
    os << "<polyline fill='none' stroke='" << col << "' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < f.size(); ++i) {
      double px = kL + (kW - kL - kR) * f.r1[i] / xmax;
      double py = kH - kB - (kH - kT - kB) * f.r2[i] / ymax;
      os << num(px) << ',' << num(py) << ' ';
    }
    if (!f.empty()) {
      double px = kL + (kW - kL - kR) * f.r1_max() / xmax;
      os << num(px) << ',' << num(kH - kB);
    }
    os << "'/>\n";
    os << "<text x='" << kW - kR - 150 << "' y='" << kT + 16 * (k + 1) << "' font-size='12' fill='"
       << col << "'>" << escape(f.tag) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_heatmap(const std::vector<std::vector<int>>& cells, const HeatmapSpec& spec) {
  const std::size_t rows = cells.size();
  const std::size_t cols = rows ? cells[0].size() : 0;
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW + 120 << "' height='" << kH
     << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  os << "<text x='" << kW / 2 << "' y='24' font-size='15' text-anchor='middle'>"
     << escape(spec.title) << "</text>\n";
  const double cw = (kW - kL - kR) / std::max<double>(1, cols);
  const double ch = (kH - kT - kB) / std::max<double>(1, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      int k = cells[r][c];
      const std::string col =
          k >= 0 && static_cast<std::size_t>(k) < spec.colors.size() ? spec.colors[k] : "#000000";
      os << "<rect x='" << num(kL + c * cw) << "' y='" << num(kH - kB - (r + 1) * ch)
         << "' width='" << num(cw + 0.2) << "' height='" << num(ch + 0.2) << "' fill='" << col
         << "'/>\n";
    }
  }
  // Ticks follow the data range rather than [0, max].
  os << "<line x1='" << kL << "' y1='" << kH - kB << "' x2='" << kW - kR << "' y2='" << kH - kB
     << "' stroke='black'/>\n";
  os << "<line x1='" << kL << "' y1='" << kT << "' x2='" << kL << "' y2='" << kH - kB
     << "' stroke='black'/>\n";
  for (int i = 0; i <= 4; ++i) {
    double fx = kL + (kW - kL - kR) * i / 4.0;
    double fy = kH - kB - (kH - kT - kB) * i / 4.0;
    os << "<text x='" << fx << "' y='" << kH - kB + 16 << "' font-size='11' text-anchor='middle'>"
       << num(spec.x_lo + (spec.x_hi - spec.x_lo) * i / 4.0) << "</text>\n";
    os << "<text x='" << kL - 6 << "' y='" << fy + 4 << "' font-size='11' text-anchor='end'>"
       << num(spec.y_lo + (spec.y_hi - spec.y_lo) * i / 4.0) << "</text>\n";
  }
  os << "<text x='" << (kL + kW - kR) / 2 << "' y='" << kH - 12
     << "' font-size='13' text-anchor='middle'>" << escape(spec.x_label) << "</text>\n";
  os << "<text x='16' y='" << (kT + kH - kB) / 2
     << "' font-size='13' text-anchor='middle' transform='rotate(-90 16 " << (kT + kH - kB) / 2
     << ")'>" << escape(spec.y_label) << "</text>\n";
  for (std::size_t k = 0; k < spec.names.size() && k < spec.colors.size(); ++k) {
    os << "<rect x='" << kW << "' y='" << kT + 22 * k << "' width='14' height='14' fill='"
       << spec.colors[k] << "'/>\n";
    os << "<text x='" << kW + 20 << "' y='" << kT + 22 * k + 12 << "' font-size='12'>"
       << escape(spec.names[k]) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rrk::geom
