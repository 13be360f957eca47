// Half-plane descriptions of rate regions in the (R1, R2) quadrant.
#pragma once

#include <string>
#include <vector>

namespace rrk::geom {

// c1*R1 + c2*R2 <= value
struct BoundEntry {
  double c1 = 0;
  double c2 = 0;
  double value = 0;
  std::string source;
};

struct BoundSet {
  std::vector<BoundEntry> entries;
};

// Throws std::invalid_argument for negative or all-zero coefficients.
void check_coefficients(const BoundSet& b);
bool all_finite(const BoundSet& b);

// Region {R1, R2 >= 0 : every entry holds with value clamped at 0}.
double member_r1_max(const BoundSet& b);
// Largest R2 at the given R1; negative when R1 lies beyond member_r1_max.
// Throws std::domain_error when R2 is unbounded.
double member_r2_at(const BoundSet& b, double r1);
bool member_contains(const BoundSet& b, double r1, double r2, double tol = 0);

}  // namespace rrk::geom
