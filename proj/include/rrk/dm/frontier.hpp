#pragma once

#include <vector>

#include "rrk/dm/grid.hpp"
#include "rrk/dm/regions.hpp"
#include "rrk/geometry/frontier.hpp"

namespace rrk::dm {

// Union over every distribution of the grid (factorization honoured by
// construction). Throws BudgetError before evaluating anything.
geom::Frontier dm_frontier(DmRegion region, const DmChannel& ch, const DistributionGrid& grid,
                           const geom::R1Grid& r1 = {});

// Union over an explicit list of distributions.
geom::Frontier dm_frontier(DmRegion region, const DmChannel& ch,
                           const std::vector<JointDistribution>& dists,
                           const geom::R1Grid& r1 = {});

}  // namespace rrk::dm
