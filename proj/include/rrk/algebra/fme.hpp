#pragma once

#include <string>
#include <vector>

#include "rrk/algebra/system.hpp"

namespace rrk::algebra {

// Projects out `var`. If an equality mentions it, that equality is used to
// substitute the variable everywhere; otherwise every (positive, negative)
// pair of inequalities is combined. A variable that does not occur leaves
// the system unchanged.
InequalitySystem fme_eliminate(const InequalitySystem& sys, const std::string& var);

InequalitySystem fme_eliminate_all(InequalitySystem sys, const std::vector<std::string>& vars);

// Adds `def.var = sum(def.summands)`. Throws std::invalid_argument when the
// defined variable already occurs or a summand does not. The empty system
// is returned unchanged.
InequalitySystem substitute(const InequalitySystem& sys, const Definition& def);

}  // namespace rrk::algebra
