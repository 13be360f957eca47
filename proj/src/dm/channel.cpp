#include "rrk/dm/channel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace rrk::dm {

void DmChannel::validate() const {
  if (nx1 < 1 || nx2 < 1 || ny1 < 1 || ny2 < 1)
    throw std::invalid_argument("channel: alphabet sizes must be >= 1");
  const std::size_t slice = static_cast<std::size_t>(ny1) * ny2;
  if (p.size() != static_cast<std::size_t>(nx1) * nx2 * slice)
    throw std::invalid_argument("channel: table has " + std::to_string(p.size()) +
                                " entries, expected " +
                                std::to_string(static_cast<std::size_t>(nx1) * nx2 * slice));
  for (std::size_t s = 0; s < static_cast<std::size_t>(nx1) * nx2; ++s) {
    double sum = 0;
    for (std::size_t k = 0; k < slice; ++k) {
      double v = p[s * slice + k];
      if (!(v >= 0) || !std::isfinite(v))
        throw std::invalid_argument("channel: negative or non-finite probability");
      sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("channel: slice x1=" + std::to_string(s / nx2) +
                                  ",x2=" + std::to_string(s % nx2) + " sums to " +
                                  std::to_string(sum));
  }
}

bool DmChannel::is_semideterministic(double tol) const {
  for (int x1 = 0; x1 < nx1; ++x1)
    for (int x2 = 0; x2 < nx2; ++x2) {
      int support = 0;
      for (int y1 = 0; y1 < ny1; ++y1) {
        double m = 0;
        for (int y2 = 0; y2 < ny2; ++y2) m += at(x1, x2, y1, y2);
        if (m > tol) ++support;
      }
      if (support != 1) return false;
    }
  return true;
}

DmChannel DmChannel::tabulate(int nx1, int nx2, int ny1, int ny2,
                              const std::function<double(int, int, int, int)>& law) {
  DmChannel ch{nx1, nx2, ny1, ny2, {}};
  ch.p.reserve(static_cast<std::size_t>(nx1) * nx2 * ny1 * ny2);
  for (int x1 = 0; x1 < nx1; ++x1)
    for (int x2 = 0; x2 < nx2; ++x2)
      for (int y1 = 0; y1 < ny1; ++y1)
        for (int y2 = 0; y2 < ny2; ++y2) ch.p.push_back(law(x1, x2, y1, y2));
  return ch;
}

const std::vector<Role>& all_roles() {
  static const std::vector<Role> r{Role::U,   Role::V,   Role::U1,   Role::U2, Role::U1c,
                                   Role::U2c, Role::U2pb, Role::X1, Role::X2};
  return r;
}

std::string role_name(Role r) {
  switch (r) {
    case Role::U: return "U";
    case Role::V: return "V";
    case Role::U1: return "U1";
    case Role::U2: return "U2";
    case Role::U1c: return "U1c";
    case Role::U2c: return "U2c";
    case Role::U2pb: return "U2pb";
    case Role::X1: return "X1";
    case Role::X2: return "X2";
  }
  return "?";
}

std::optional<Role> parse_role(const std::string& name) {
  for (Role r : all_roles())
    if (role_name(r) == name) return r;
  return std::nullopt;
}

void JointDistribution::validate() const {
  if (roles.size() != sizes.size())
    throw std::invalid_argument("distribution: roles/sizes mismatch");
  std::set<Role> seen(roles.begin(), roles.end());
  if (seen.size() != roles.size()) throw std::invalid_argument("distribution: repeated role");
  std::size_t total = 1;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("distribution: alphabet size must be >= 1");
    total *= static_cast<std::size_t>(s);
  }
  if (p.size() != total)
    throw std::invalid_argument("distribution: table has " + std::to_string(p.size()) +
                                " entries, expected " + std::to_string(total));
  double sum = 0;
  for (double v : p) {
    if (!(v >= 0) || !std::isfinite(v))
      throw std::invalid_argument("distribution: negative or non-finite probability");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("distribution: total mass " + std::to_string(sum));
}

bool JointDistribution::has(Role r) const {
  return std::find(roles.begin(), roles.end(), r) != roles.end();
}

int JointDistribution::size_of(Role r) const {
  auto it = std::find(roles.begin(), roles.end(), r);
  if (it == roles.end()) throw std::out_of_range("distribution has no role " + role_name(r));
  return sizes[static_cast<std::size_t>(it - roles.begin())];
}

Pmf JointDistribution::as_pmf() const {
  std::vector<std::string> names;
  for (Role r : roles) names.push_back(role_name(r));
  return Pmf(names, sizes, p);
}

Pmf induce_outputs(const DmChannel& ch, const JointDistribution& dist) {
  if (!dist.has(Role::X1) || !dist.has(Role::X2))
    throw std::invalid_argument("distribution must contain X1 and X2");
  if (dist.size_of(Role::X1) != ch.nx1 || dist.size_of(Role::X2) != ch.nx2)
    throw std::invalid_argument("input alphabet sizes differ between channel and distribution");
  std::vector<std::string> names;
  std::vector<int> sizes = dist.sizes;
  for (Role r : dist.roles) names.push_back(role_name(r));
  names.push_back("Y1");
  names.push_back("Y2");
  sizes.push_back(ch.ny1);
  sizes.push_back(ch.ny2);

  const std::size_t nr = dist.roles.size();
  std::size_t ix1 = 0, ix2 = 0;
  for (std::size_t i = 0; i < nr; ++i) {
    if (dist.roles[i] == Role::X1) ix1 = i;
    if (dist.roles[i] == Role::X2) ix2 = i;
  }
  const std::size_t ny = static_cast<std::size_t>(ch.ny1) * ch.ny2;
  std::vector<double> q(dist.p.size() * ny, 0.0);
  std::vector<int> digit(nr, 0);
  for (std::size_t flat = 0; flat < dist.p.size(); ++flat) {
    const double w = dist.p[flat];
    if (w != 0) {
      const std::size_t base =
          (static_cast<std::size_t>(digit[ix1]) * ch.nx2 + digit[ix2]) * ny;
      for (std::size_t k = 0; k < ny; ++k) q[flat * ny + k] = w * ch.p[base + k];
    }
    for (std::size_t v = nr; v-- > 0;) {
      if (++digit[v] < dist.sizes[v]) break;
      digit[v] = 0;
    }
  }
  return Pmf(names, sizes, std::move(q));
}

std::string Factorization::str() const {
  std::string out;
  for (const auto& f : factors) {
    out += "P(";
    for (std::size_t i = 0; i < f.target.size(); ++i)
      out += (i ? "," : "") + role_name(f.target[i]);
    if (!f.given.empty()) {
      out += "|";
      for (std::size_t i = 0; i < f.given.size(); ++i)
        out += (i ? "," : "") + role_name(f.given[i]);
    }
    out += ")";
  }
  return out;
}

double factorization_deviation(const JointDistribution& dist, const Factorization& f) {
  const std::size_t nr = dist.roles.size();
  auto pos = [&](Role r) {
    auto it = std::find(dist.roles.begin(), dist.roles.end(), r);
    if (it == dist.roles.end())
      throw std::invalid_argument("factorization mentions missing role " + role_name(r));
    return static_cast<std::size_t>(it - dist.roles.begin());
  };
  std::vector<int> covered(nr, 0);
  for (const auto& fac : f.factors)
    for (Role r : fac.target) ++covered[pos(r)];
  for (std::size_t i = 0; i < nr; ++i)
    if (covered[i] != 1)
      throw std::invalid_argument("factorization must cover role " + role_name(dist.roles[i]) +
                                  " exactly once");

  // For each factor, marginal tables over (target+given) and (given).
  Pmf joint = dist.as_pmf();
  struct Table {
    std::vector<std::size_t> num_vars, den_vars;
    Pmf num, den;
  };
  std::vector<Table> tabs;
  for (const auto& fac : f.factors) {
    Table t;
    std::vector<std::string> nn, dn;
    for (Role r : fac.target) {
      t.num_vars.push_back(pos(r));
      nn.push_back(role_name(r));
    }
    for (Role r : fac.given) {
      t.num_vars.push_back(pos(r));
      t.den_vars.push_back(pos(r));
      nn.push_back(role_name(r));
      dn.push_back(role_name(r));
    }
    t.num = joint.marginal(nn);
    t.den = joint.marginal(dn);
    tabs.push_back(std::move(t));
  }
  auto flat_index = [&](const std::vector<std::size_t>& vars, const std::vector<int>& digit) {
    std::size_t idx = 0;
    for (std::size_t v : vars) idx = idx * static_cast<std::size_t>(dist.sizes[v]) + digit[v];
    return idx;
  };

  double tv = 0;
  std::vector<int> digit(nr, 0);
  for (std::size_t flat = 0; flat < dist.p.size(); ++flat) {
    double q = 1;
    for (const auto& t : tabs) {
      double pn = t.num.probs()[flat_index(t.num_vars, digit)];
      double pd = t.den_vars.empty() ? 1.0 : t.den.probs()[flat_index(t.den_vars, digit)];
      q *= pd > 0 ? pn / pd : 0.0;
    }
    tv += std::fabs(dist.p[flat] - q);
    for (std::size_t v = nr; v-- > 0;) {
      if (++digit[v] < dist.sizes[v]) break;
      digit[v] = 0;
    }
  }
  return 0.5 * tv;
}

}  // namespace rrk::dm
