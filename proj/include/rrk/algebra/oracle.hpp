// Numeric cross-check of a symbolic projection: sample points, decide
// membership in the projected system directly and by solving for the
// eliminated variables in the original system.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "rrk/algebra/system.hpp"

namespace rrk::algebra {

using Point = std::map<std::string, Rational>;

struct SoundnessReport {
  std::size_t samples = 0;
  std::size_t inside = 0;  // points accepted by the direct projection
  std::size_t disagreements = 0;
  std::optional<Point> counterexample;
  bool counterexample_in_projection = false;  // what the symbolic side said

  bool sound() const { return disagreements == 0; }
};

// True iff some assignment of the variables of `original` that are absent
// from `point` satisfies every row. Exact.
bool in_projection(const InequalitySystem& original, const Point& point,
                   const std::map<std::string, Rational>& atom_values);

bool satisfies(const InequalitySystem& sys, const Point& point,
               const std::map<std::string, Rational>& atom_values);

// Points are drawn on a per-coordinate lattice scaled to the coordinate's
// extent in `projected` (median |rhs| when nothing caps it).
// `coordinates` are the surviving variables; empty means those of `projected`.
SoundnessReport numeric_projection_oracle(const InequalitySystem& original,
                                          const InequalitySystem& projected,
                                          const std::map<std::string, Rational>& atom_values,
                                          std::size_t samples, std::uint64_t seed,
                                          const std::set<std::string>& coordinates = {});

}  // namespace rrk::algebra
