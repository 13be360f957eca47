// Discrete-memoryless inner and outer bounds as BoundSets.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrk/algebra/system.hpp"
#include "rrk/dm/channel.hpp"
#include "rrk/geometry/bound_set.hpp"

namespace rrk::dm {

enum class DmRegion {
  OuterThm1,
  Outer1Rv,
  Outer3Rv,
  OuterBcDms,
  InnerGeneral,
  InnerSuperpos,
  InnerBinning,
  SemidetCap,
};

const std::vector<DmRegion>& all_dm_regions();
std::string region_name(DmRegion r);  // "OUTER_THM1", ...
std::optional<DmRegion> parse_dm_region(const std::string& name);

struct RegionInfo {
  std::vector<Role> roles;      // required, in the order grids generate them
  Factorization factorization;  // constraint on the joint distribution
  std::string text;             // inequalities in the rate DSL over R1, R2
};

const RegionInfo& region_info(DmRegion r);
// Parsed form of region_info(r).text.
const algebra::InequalitySystem& region_system(DmRegion r);

class FactorizationError : public std::invalid_argument {
 public:
  FactorizationError(const std::string& what, double deviation)
      : std::invalid_argument(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

// One entry per inequality of the region, raw values (no clamping).
// Throws std::invalid_argument for missing or surplus roles and
// FactorizationError when the declared product form is violated.
geom::BoundSet eval_dm_region(DmRegion region, const DmChannel& ch, const JointDistribution& dist);

}  // namespace rrk::dm
