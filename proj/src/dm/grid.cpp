#include "rrk/dm/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rrk::dm {

namespace {

std::string budget_message(double required, std::size_t budget) {
  std::ostringstream os;
  os << "distribution grid needs " << required << " members, budget is " << budget;
  return os.str();
}

void compositions(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= n; ++v) {
    cur.push_back(v);
    compositions(n - v, k - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BudgetError::BudgetError(double required, std::size_t budget)
    : std::runtime_error(budget_message(required, budget)), required_(required) {}

int lattice_denominator(double step) {
  if (!(step > 0 && step <= 1)) throw std::invalid_argument("grid step must lie in (0, 1]");
  const double inv = 1.0 / step;
  const double n = std::round(inv);
  if (std::fabs(inv - n) > 1e-9 * n)
    throw std::invalid_argument("grid step must be 1/n for an integer n");
  return static_cast<int>(n);
}

double simplex_lattice_size(int n, int k) {
  // C(n + k - 1, k - 1)
  double c = 1;
  for (int i = 1; i < k; ++i) c = c * (n + i) / i;
  return std::round(c);
}

GridEnumerator::GridEnumerator(std::vector<Role> roles, std::vector<int> sizes, Factorization f,
                               double step, std::size_t budget)
    : roles_(std::move(roles)), sizes_(std::move(sizes)), f_(std::move(f)) {
  n_ = dm::lattice_denominator(step);
  auto size_of = [&](Role r) {
    auto it = std::find(roles_.begin(), roles_.end(), r);
    if (it == roles_.end()) throw std::invalid_argument("factorization mentions missing role");
    return sizes_[static_cast<std::size_t>(it - roles_.begin())];
  };
  double required = 1;
  for (std::size_t i = 0; i < f_.factors.size(); ++i) {
    int cells = 1, configs = 1;
    for (Role r : f_.factors[i].target) cells *= size_of(r);
    for (Role r : f_.factors[i].given) configs *= size_of(r);
    required *= std::pow(simplex_lattice_size(n_, cells), configs);
    if (required > static_cast<double>(budget)) throw BudgetError(required, budget);
    for (int c = 0; c < configs; ++c) slots_.push_back({i, static_cast<std::size_t>(c)});
  }
  for (const auto& fac : f_.factors) {
    int cells = 1;
    for (Role r : fac.target) cells *= size_of(r);
    std::vector<std::vector<int>> pts;
    std::vector<int> cur;
    compositions(n_, cells, cur, pts);
    lattice_.push_back(std::move(pts));
  }
  count_ = static_cast<std::size_t>(required);
}

JointDistribution GridEnumerator::member(std::size_t index) const {
  if (index >= count_) throw std::out_of_range("grid member index out of range");
  // Mixed-radix decode: one lattice point per (factor, given configuration).
  std::vector<const std::vector<int>*> pick(slots_.size());
  for (std::size_t s = slots_.size(); s-- > 0;) {
    const auto& pts = lattice_[slots_[s].factor];
    pick[s] = &pts[index % pts.size()];
    index /= pts.size();
  }
  // Slot offset of each factor.
  std::vector<std::size_t> first(f_.factors.size(), 0);
  for (std::size_t s = slots_.size(); s-- > 0;) first[slots_[s].factor] = s;

  auto idx_of = [&](Role r) {
    return static_cast<std::size_t>(std::find(roles_.begin(), roles_.end(), r) - roles_.begin());
  };

  JointDistribution d;
  d.roles = roles_;
  d.sizes = sizes_;
  std::size_t total = 1;
  for (int s : sizes_) total *= static_cast<std::size_t>(s);
  d.p.assign(total, 0.0);
  std::vector<int> digit(roles_.size(), 0);
  const double inv_n = 1.0 / n_;
  for (std::size_t flat = 0; flat < total; ++flat) {
    double q = 1;
    for (std::size_t i = 0; i < f_.factors.size() && q != 0; ++i) {
      std::size_t cell = 0, cfg = 0;
      for (Role r : f_.factors[i].target) {
        std::size_t k = idx_of(r);
        cell = cell * static_cast<std::size_t>(sizes_[k]) + digit[k];
      }
      for (Role r : f_.factors[i].given) {
        std::size_t k = idx_of(r);
        cfg = cfg * static_cast<std::size_t>(sizes_[k]) + digit[k];
      }
      q *= (*pick[first[i] + cfg])[cell] * inv_n;
    }
    d.p[flat] = q;
    for (std::size_t v = roles_.size(); v-- > 0;) {
      if (++digit[v] < sizes_[v]) break;
      digit[v] = 0;
    }
  }
  return d;
}

GridEnumerator make_grid(const std::vector<Role>& roles, const Factorization& f,
                         const DmChannel& ch, const DistributionGrid& grid) {
  std::vector<int> sizes;
  for (Role r : roles) {
    auto it = grid.sizes.find(r);
    int s;
    if (it != grid.sizes.end()) {
      s = it->second;
    } else if (r == Role::X1) {
      s = ch.nx1;
    } else if (r == Role::X2) {
      s = ch.nx2;
    } else {
      s = std::max(ch.nx1, ch.nx2);
    }
    if (r == Role::X1 && s != ch.nx1) throw std::invalid_argument("grid: |X1| differs from channel");
    if (r == Role::X2 && s != ch.nx2) throw std::invalid_argument("grid: |X2| differs from channel");
    if (s < 1) throw std::invalid_argument("grid: alphabet size must be >= 1");
    sizes.push_back(s);
  }
  return GridEnumerator(roles, sizes, f, grid.step, grid.budget);
}

}  // namespace rrk::dm
