#include "rrk/dm/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "rrk/algebra/atom.hpp"

namespace rrk::dm {

Pmf::Pmf(std::vector<std::string> names, std::vector<int> sizes, std::vector<double> p)
    : names_(std::move(names)), sizes_(std::move(sizes)), p_(std::move(p)) {
  if (names_.size() != sizes_.size()) throw std::invalid_argument("pmf: names/sizes mismatch");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("pmf: repeated variable name");
  std::size_t total = 1;
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("pmf: alphabet size must be >= 1");
    total *= static_cast<std::size_t>(s);
  }
  if (p_.size() != total)
    throw std::invalid_argument("pmf: table has " + std::to_string(p_.size()) +
                                " entries, expected " + std::to_string(total));
}

std::size_t Pmf::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool Pmf::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Pmf Pmf::marginal(const std::vector<std::string>& keep) const {
  std::vector<std::size_t> idx;
  std::vector<int> sz;
  for (const auto& k : keep) {
    idx.push_back(index_of(k));
    sz.push_back(sizes_[idx.back()]);
  }
  const std::size_t nv = names_.size();
  std::vector<std::size_t> out_stride(keep.size(), 1);
  for (std::size_t i = keep.size(); i-- > 1;) out_stride[i - 1] = out_stride[i] * sz[i];
  std::size_t out_total = 1;
  for (int s : sz) out_total *= static_cast<std::size_t>(s);
  std::vector<double> q(out_total, 0.0);

  // Contribution of each source variable to the output index.
  std::vector<std::size_t> contrib(nv, 0);
  for (std::size_t k = 0; k < idx.size(); ++k) contrib[idx[k]] = out_stride[k];
  std::vector<int> digit(nv, 0);
  std::size_t out = 0;
  for (std::size_t flat = 0; flat < p_.size(); ++flat) {
    q[out] += p_[flat];
    for (std::size_t v = nv; v-- > 0;) {
      if (++digit[v] < sizes_[v]) {
        out += contrib[v];
        break;
      }
      out -= contrib[v] * static_cast<std::size_t>(sizes_[v] - 1);
      digit[v] = 0;
    }
  }
  return Pmf(keep, sz, std::move(q));
}

double Pmf::entropy(const std::vector<std::string>& vars) const {
  if (vars.empty()) return 0.0;
  Pmf m = marginal(vars);
  double h = 0;
  for (double v : m.p_)
    if (v > 0) h -= v * std::log2(v);
  return h;
}

double Pmf::conditional_entropy(const std::vector<std::string>& vars,
                                const std::vector<std::string>& given) const {
  std::vector<std::string> all = vars;
  all.insert(all.end(), given.begin(), given.end());
  return std::max(0.0, entropy(all) - entropy(given));
}

double Pmf::mutual_information(const std::vector<std::string>& left,
                               const std::vector<std::string>& right,
                               const std::vector<std::string>& given) const {
  std::set<std::string> seen;
  for (const auto* set : {&left, &right, &given})
    for (const auto& v : *set) {
      index_of(v);
      if (!seen.insert(v).second)
        throw std::invalid_argument("variable '" + v + "' appears in more than one argument");
    }
  auto cat = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  double v = entropy(cat(left, given)) + entropy(cat(right, given)) -
             entropy(cat(cat(left, right), given)) - entropy(given);
  return std::max(0.0, v);
}

double evaluate_info_atom(const Pmf& pmf, const std::string& atom) {
  auto a = algebra::parse_info_atom(atom);
  if (a.kind == 'H') return pmf.conditional_entropy(a.groups[0], a.given);
  return pmf.mutual_information(a.groups[0], a.groups[1], a.given);
}

Pmf random_pmf(const std::vector<std::string>& names, const std::vector<int>& sizes,
               std::mt19937_64& rng) {
  std::size_t total = 1;
  for (int s : sizes) total *= static_cast<std::size_t>(s);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(total);
  double sum = 0;
  for (auto& v : p) sum += (v = e(rng));
  for (auto& v : p) v /= sum;
  return Pmf(names, sizes, std::move(p));
}

double binary_entropy(double p) {
  if (p <= 0 || p >= 1) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

}  // namespace rrk::dm
