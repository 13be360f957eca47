#include "rrk/algebra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "rrk/algebra/simplex.hpp"

namespace rrk::algebra {

bool satisfies(const InequalitySystem& sys, const Point& point,
               const std::map<std::string, Rational>& atom_values) {
  for (const auto& r : sys.inequalities)
    if (!holds(r, point, atom_values)) return false;
  for (const auto& e : sys.equalities) {
    Rational lhs = 0;
    for (const auto& [v, c] : e.lhs) lhs += c * point.at(v);
    if (lhs != e.rhs.evaluate(atom_values)) return false;
  }
  return true;
}

bool in_projection(const InequalitySystem& original, const Point& point,
                   const std::map<std::string, Rational>& atom_values) {
  std::vector<std::string> free_vars;
  for (const auto& v : original.variables())
    if (!point.count(v)) free_vars.push_back(v);
  if (free_vars.empty()) return satisfies(original, point, atom_values);

  const std::size_t nF = free_vars.size();
  const std::size_t nI = original.inequalities.size();
  const std::size_t nE = original.equalities.size();
  const std::size_t cols = 2 * nF + nI;
  RationalMatrix A;
  std::vector<Rational> b;
  A.reserve(nI + nE);

  auto add_row = [&](const LinearForm& lhs, const AffineBound& rhs, std::optional<std::size_t> slack) {
    std::vector<Rational> row(cols, 0);
    Rational r = rhs.evaluate(atom_values);
    for (const auto& [v, c] : lhs) {
      auto it = point.find(v);
      if (it != point.end()) {
        r -= c * it->second;
      } else {
        auto k = static_cast<std::size_t>(
            std::find(free_vars.begin(), free_vars.end(), v) - free_vars.begin());
        row[2 * k] = c;
        row[2 * k + 1] = -c;
      }
    }
    if (slack) row[2 * nF + *slack] = 1;
    A.push_back(std::move(row));
    b.push_back(r);
  };
  for (std::size_t i = 0; i < nI; ++i)
    add_row(original.inequalities[i].lhs, original.inequalities[i].rhs, i);
  for (const auto& e : original.equalities) add_row(e.lhs, e.rhs, std::nullopt);
  return find_nonnegative_solution(A, b).has_value();
}

SoundnessReport numeric_projection_oracle(const InequalitySystem& original,
                                          const InequalitySystem& projected,
                                          const std::map<std::string, Rational>& atom_values,
                                          std::size_t samples, std::uint64_t seed,
                                          const std::set<std::string>& coordinates) {
  SoundnessReport rep;
  const std::set<std::string> kept = coordinates.empty() ? projected.variables() : coordinates;

  // Each coordinate is drawn from a lattice of spacing span/64 over
  // [-span/8, 9 span/8]. span is the coordinate's largest value in the
  // projected region when a row with nonnegative coefficients caps it, and the
  // median nonzero |rhs| otherwise, so that a fair share of points lands
  // inside.
  std::vector<double> mags;
  for (const auto& r : original.inequalities) {
    double v = std::fabs(r.rhs.evaluate(atom_values).get_d());
    if (v > 1e-9) mags.push_back(v);
  }
  double fallback = 1;
  if (!mags.empty()) {
    std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
    fallback = mags[mags.size() / 2];
  }
  std::map<std::string, Rational> unit;
  for (const auto& v : kept) {
    double cap = std::numeric_limits<double>::infinity();
    for (const auto& r : projected.inequalities) {
      auto it = r.lhs.find(v);
      if (it == r.lhs.end() || it->second <= 0) continue;
      bool nonneg = true;
      for (const auto& [w, c] : r.lhs) nonneg = nonneg && c > 0;
      if (nonneg) cap = std::min(cap, r.rhs.evaluate(atom_values).get_d() / it->second.get_d());
    }
    const double span = (cap > 1e-9 && std::isfinite(cap)) ? cap : fallback;
    unit[v] = Rational(std::max(1L, std::lround(span * 1024)), 1024 * 64);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-8, 72);

  for (std::size_t s = 0; s < samples; ++s) {
    Point p;
    for (const auto& v : kept) p[v] = unit[v] * pick(rng);
    bool direct = in_projection(original, p, atom_values);
    bool symbolic = satisfies(projected, p, atom_values);
    ++rep.samples;
    if (direct) ++rep.inside;
    if (direct != symbolic) {
      ++rep.disagreements;
      if (!rep.counterexample) {
        rep.counterexample = p;
        rep.counterexample_in_projection = symbolic;
      }
    }
  }
  return rep;
}

}  // namespace rrk::algebra
