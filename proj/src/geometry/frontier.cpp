#include "rrk/geometry/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "rrk/geometry/kernels.hpp"

namespace rrk::geom {

double Frontier::r2_at(double x) const {
  if (r1.empty() || x < 0 || x > r1.back()) return -1.0;
  auto it = std::lower_bound(r1.begin(), r1.end(), x);
  std::size_t j = static_cast<std::size_t>(it - r1.begin());
  if (r1[j] == x) return r2[j];
  const double t = (x - r1[j - 1]) / (r1[j] - r1[j - 1]);
  return r2[j - 1] + t * (r2[j] - r2[j - 1]);
}

bool Frontier::contains(double x, double y) const {
  if (x < 0 || y < 0) return false;
  return y <= r2_at(x);
}

void check_frontier(const Frontier& f) {
  if (f.r1.size() != f.r2.size()) throw std::logic_error("frontier: size mismatch");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f.r1[i] >= 0 && f.r2[i] >= 0)) throw std::logic_error("frontier: negative coordinate");
    if (i && !(f.r1[i] > f.r1[i - 1])) throw std::logic_error("frontier: R1 not increasing");
    if (i && f.r2[i] > f.r2[i - 1]) throw std::logic_error("frontier: R2 increasing");
  }
}

namespace {

// linspace(0, upper) cut at r1max, then r1max itself.
std::vector<double> r1_samples(const R1Grid& grid, double r1max) {
  const double upper = grid.upper.value_or(r1max);
  std::vector<double> xs;
  if (!(upper > 0) || !std::isfinite(upper)) return {0.0};
  xs.reserve(grid.samples + 1);
  for (std::size_t i = 0; i < grid.samples; ++i) {
    double x = upper * static_cast<double>(i) / static_cast<double>(grid.samples - 1);
    if (i + 1 == grid.samples) x = upper;
    if (x <= r1max) xs.push_back(x);
  }
  if (r1max <= upper && (xs.empty() || xs.back() < r1max)) xs.push_back(r1max);
  return xs;
}

Frontier assemble(std::vector<double> xs, const std::vector<double>& ys, std::string tag) {
  Frontier f;
  f.tag = std::move(tag);
  f.r1 = std::move(xs);
  f.r2.resize(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) f.r2[i] = std::max(ys[i], 0.0);
  return f;
}

}  // namespace

Frontier frontier_from_bound_sets(const std::vector<BoundSet>& members, const R1Grid& grid,
                                  std::string tag) {
  if (grid.samples < 2) throw std::invalid_argument("R1 grid needs at least 2 samples");
  MemberTable table = build_member_table(members);
  if (table.members == 0) throw std::invalid_argument("empty union: no usable member region");
  double r1max = 0;
  for (std::size_t m = 0; m < table.members; ++m) r1max = std::max(r1max, table.cap[m]);
  std::vector<double> xs = r1_samples(grid, r1max);
  std::vector<double> ys(xs.size());
  upper_envelope(table, xs.data(), xs.size(), ys.data());
  return assemble(std::move(xs), ys, std::move(tag));
}

Frontier frontier_from_generator(std::size_t count,
                                 const std::function<BoundSet(std::size_t)>& gen,
                                 const R1Grid& grid, std::string tag, std::size_t chunk) {
  if (grid.samples < 2) throw std::invalid_argument("R1 grid needs at least 2 samples");
  if (chunk == 0) chunk = 1;
  const std::size_t chunks = (count + chunk - 1) / chunk;
  auto load = [&](std::size_t c) {
    std::vector<BoundSet> part;
    for (std::size_t i = c * chunk; i < std::min(count, (c + 1) * chunk); ++i)
      part.push_back(gen(i));
    return build_member_table(part);
  };

  std::vector<double> cap(chunks, -std::numeric_limits<double>::infinity());
  std::vector<std::size_t> kept(chunks, 0);
  parallel_for(chunks, [&](std::size_t c) {
    MemberTable t = load(c);
    kept[c] = t.members;
    for (std::size_t m = 0; m < t.members; ++m) cap[c] = std::max(cap[c], t.cap[m]);
  });
  std::size_t total = 0;
  double r1max = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    total += kept[c];
    if (kept[c]) r1max = std::max(r1max, cap[c]);
  }
  if (total == 0) throw std::invalid_argument("empty union: no usable member region");

  std::vector<double> xs = r1_samples(grid, r1max);
  std::vector<std::vector<double>> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    MemberTable t = load(c);
    partial[c].assign(xs.size(), -std::numeric_limits<double>::infinity());
    if (t.members) upper_envelope(t, xs.data(), xs.size(), partial[c].data());
  });
  std::vector<double> ys(xs.size(), -std::numeric_limits<double>::infinity());
  for (const auto& p : partial)
    for (std::size_t j = 0; j < xs.size(); ++j) ys[j] = std::max(ys[j], p[j]);
  return assemble(std::move(xs), ys, std::move(tag));
}

Frontier frontier_union(const std::vector<Frontier>& parts, std::string tag) {
  std::vector<double> xs;
  for (const auto& p : parts) xs.insert(xs.end(), p.r1.begin(), p.r1.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Frontier f;
  f.tag = std::move(tag);
  for (double x : xs) {
    double y = -1;
    for (const auto& p : parts) y = std::max(y, p.r2_at(x));
    f.r1.push_back(x);
    f.r2.push_back(std::max(y, 0.0));
  }
  return f;
}

Frontier concave_envelope(const Frontier& f) {
  const std::size_t n = f.size();
  if (n <= 2) return f;
  // Upper hull by monotone chain.
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2) {
      std::size_t a = hull[hull.size() - 2], b = hull.back();
      double cross = (f.r1[b] - f.r1[a]) * (f.r2[i] - f.r2[a]) -
                     (f.r2[b] - f.r2[a]) * (f.r1[i] - f.r1[a]);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  Frontier out = f;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (h + 1 < hull.size() && hull[h + 1] <= i) ++h;
    if (hull[h] == i) {
      out.r2[i] = f.r2[i];
      continue;
    }
    std::size_t a = hull[h], b = hull[h + 1];
    double t = (f.r1[i] - f.r1[a]) / (f.r1[b] - f.r1[a]);
    // Points already on the chord keep their value so that a second pass
    // returns the same numbers.
    const double chord = f.r2[a] + t * (f.r2[b] - f.r2[a]);
    if (chord > f.r2[i] + 1e-12 * std::max(1.0, std::fabs(chord))) out.r2[i] = chord;
  }
  return out;
}

namespace {

bool same_sample(double a, double b) {
  return std::fabs(a - b) <= 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace

ContainmentReport region_contains(const Frontier& outer, const Frontier& inner, double tol) {
  ContainmentReport rep;
  rep.max_violation = -std::numeric_limits<double>::infinity();
  if (inner.r1_max() > outer.r1_max() + tol) {
    rep.contained = false;
    rep.max_violation = inner.r1_max() - outer.r1_max();
    rep.worst_r1 = inner.r1_max();
  }
  std::size_t j = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    while (j < outer.size() && outer.r1[j] < inner.r1[i] && !same_sample(outer.r1[j], inner.r1[i]))
      ++j;
    if (j == outer.size()) break;
    if (!same_sample(outer.r1[j], inner.r1[i])) continue;
    ++rep.compared;
    double v = inner.r2[i] - outer.r2[j];
    if (v > rep.max_violation) {
      rep.max_violation = v;
      rep.worst_r1 = inner.r1[i];
    }
    if (v > tol) rep.contained = false;
  }
  if (rep.compared == 0 && rep.max_violation < 0) rep.max_violation = 0;
  return rep;
}

namespace {

bool inner_has(const Frontier& inner, double x, double y) {
  x = std::max(x, 0.0);
  y = std::max(y, 0.0);
  return inner.contains(x, y);
}

}  // namespace

GapReport gap_between(const Frontier& outer, const Frontier& inner) {
  if (outer.empty() || inner.empty()) throw std::invalid_argument("gap_between: empty frontier");
  GapReport rep;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const double x = outer.r1[i], y = outer.r2[i];

    if (!inner_has(inner, x - rep.additive, y - rep.additive)) {
      double lo = rep.additive, hi = std::max(x, y);
      for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
        double mid = 0.5 * (lo + hi);
        if (inner_has(inner, x - mid, y - mid)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      rep.additive = hi;
      rep.additive_witness = {x, y};
    }

    if (!inner_has(inner, x / rep.multiplicative, y / rep.multiplicative)) {
      double lo = rep.multiplicative, hi = 2 * lo;
      while (!inner_has(inner, x / hi, y / hi)) {
        lo = hi;
        hi *= 2;
        if (hi > 1e300) break;
      }
      for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (inner_has(inner, x / mid, y / mid)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      rep.multiplicative = hi;
      rep.multiplicative_witness = {x, y};
    }
  }
  return rep;
}

void write_frontier_csv(std::ostream& os, const Frontier& f) {
  os << "R1_bits,R2_bits\n";
  char buf[64];
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", f.r1[i], f.r2[i]);
    os << buf;
  }
}

void write_frontiers_csv(std::ostream& os, const std::vector<Frontier>& fs) {
  if (fs.size() == 1) {
    write_frontier_csv(os, fs.front());
    return;
  }
  for (const auto& f : fs) {
    os << "# region=" << f.tag << "\n";
    write_frontier_csv(os, f);
  }
}

}  // namespace rrk::geom
