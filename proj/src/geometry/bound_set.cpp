#include "rrk/geometry/bound_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rrk::geom {

void check_coefficients(const BoundSet& b) {
  for (const auto& e : b.entries) {
    if (!(e.c1 >= 0 && e.c2 >= 0) || (e.c1 == 0 && e.c2 == 0))
      throw std::invalid_argument("bound '" + e.source + "' has invalid rate coefficients");
  }
}

bool all_finite(const BoundSet& b) {
  return std::all_of(b.entries.begin(), b.entries.end(),
                     [](const BoundEntry& e) { return std::isfinite(e.value); });
}

double member_r1_max(const BoundSet& b) {
  double cap = std::numeric_limits<double>::infinity();
  for (const auto& e : b.entries)
    if (e.c1 > 0) cap = std::min(cap, std::max(e.value, 0.0) / e.c1);
  return cap;
}

double member_r2_at(const BoundSet& b, double r1) {
  if (r1 > member_r1_max(b)) return -1.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : b.entries)
    if (e.c2 > 0) best = std::min(best, (std::max(e.value, 0.0) - e.c1 * r1) / e.c2);
  if (std::isinf(best)) throw std::domain_error("region is unbounded in R2");
  return std::max(best, 0.0);
}

bool member_contains(const BoundSet& b, double r1, double r2, double tol) {
  if (r1 < -tol || r2 < -tol) return false;
  for (const auto& e : b.entries)
    if (e.c1 * r1 + e.c2 * r2 > std::max(e.value, 0.0) + tol) return false;
  return true;
}

}  // namespace rrk::geom
