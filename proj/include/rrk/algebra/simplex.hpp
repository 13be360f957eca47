#pragma once

#include <optional>
#include <vector>

#include "rrk/algebra/system.hpp"

namespace rrk::algebra {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Finds x >= 0 with A x = b, or reports infeasibility. Exact phase-one simplex
// with Bland's rule, so it always terminates.
std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& A,
                                                               const std::vector<Rational>& b);

}  // namespace rrk::algebra
