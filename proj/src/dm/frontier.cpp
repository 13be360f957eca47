#include "rrk/dm/frontier.hpp"

namespace rrk::dm {

geom::Frontier dm_frontier(DmRegion region, const DmChannel& ch, const DistributionGrid& grid,
                           const geom::R1Grid& r1) {
  ch.validate();
  const RegionInfo& info = region_info(region);
  GridEnumerator g = make_grid(info.roles, info.factorization, ch, grid);
  return geom::frontier_from_generator(
      g.size(), [&](std::size_t i) { return eval_dm_region(region, ch, g.member(i)); }, r1,
      region_name(region));
}

geom::Frontier dm_frontier(DmRegion region, const DmChannel& ch,
                           const std::vector<JointDistribution>& dists, const geom::R1Grid& r1) {
  ch.validate();
  return geom::frontier_from_family(
      [&](const JointDistribution& d) { return eval_dm_region(region, ch, d); }, dists, r1,
      region_name(region));
}

}  // namespace rrk::dm
