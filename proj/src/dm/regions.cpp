#include "rrk/dm/regions.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "rrk/algebra/parse.hpp"
#include "rrk/dm/pmf.hpp"

namespace rrk::dm {

namespace {

using R = Role;

Factorization joint_of(std::vector<Role> roles) { return {{{std::move(roles), {}}}}; }

const std::map<DmRegion, RegionInfo>& table() {
  static const std::map<DmRegion, RegionInfo> t{
      {DmRegion::OuterThm1,
       {{R::X1, R::X2},
        joint_of({R::X1, R::X2}),
        "R1 <= I(Y1;X1|X2)\n"
        "R1 <= I(Y2;X1|X2)\n"
        "R1 + R2 <= I(Y2;X1,X2)\n"}},
      {DmRegion::Outer1Rv,
       {{R::U, R::X1, R::X2},
        joint_of({R::U, R::X1, R::X2}),
        "R1 <= I(Y1;X1|X2)\n"
        "R1 <= I(Y2;X1|X2)\n"
        "R2 <= I(Y2;U,X2)\n"
        "R1 + R2 <= I(Y2;U,X2) + I(Y1;X1|U,X2)\n"
        "R1 + R2 <= I(Y2;X1,X2)\n"}},
      {DmRegion::Outer3Rv,
       {{R::V, R::U1, R::U2, R::X1, R::X2},
        {{{{R::U1}, {}},
          {{R::U2}, {}},
          {{R::V}, {R::U1, R::U2}},
          {{R::X2}, {R::U2, R::V}},
          {{R::X1}, {R::U1, R::U2}}}},
        "R1 <= I(Y1;X1|X2)\n"
        "R1 <= I(Y2;X1|X2)\n"
        "R1 <= I(Y1;V,U1)\n"
        "R1 <= I(Y2;V,U1)\n"
        "R2 <= I(Y2;V,U2)\n"
        "R1 + R2 <= I(Y2;X2|U1,V) + I(Y1;V,U1)\n"
        "R1 + R2 <= I(Y1;X1|U2,V) + I(Y2;V,U2)\n"
        "R1 + R2 <= I(Y2;X1,X2)\n"}},
      {DmRegion::OuterBcDms,
       {{R::U, R::X1, R::X2},
        joint_of({R::U, R::X1, R::X2}),
        "R1 <= I(Y1;U)\n"
        "R1 + R2 <= I(Y2;X1,X2|U) + I(Y1;U)\n"
        "R1 + R2 <= I(Y2;X1,X2)\n"}},
      {DmRegion::InnerGeneral,
       {{R::U1c, R::U2c, R::U2pb, R::X1, R::X2},
        joint_of({R::U1c, R::U2c, R::U2pb, R::X1, R::X2}),
        "R1 <= I(Y1;U1c|U2c) - I(U1c;X2|U2c)\n"
        "R1 <= I(Y2;U1c,U2pb|U2c,X2)\n"
        "R1 + R2 <= I(Y2;U2c,X2,U1c,U2pb)\n"
        "R1 + R2 <= I(Y1;U1c,U2c) + I(Y2;X2,U2pb|U1c,U2c)\n"
        "2*R1 + R2 <= I(Y1;U1c,U2c) + I(Y2;U1c,X2,U2pb|U2c) - I(U1c;X2|U2c)\n"}},
      {DmRegion::InnerSuperpos,
       {{R::X1, R::X2},
        joint_of({R::X1, R::X2}),
        "R1 <= I(Y1;X1|X2)\n"
        "R1 <= I(Y2;X1|X2)\n"
        "R1 + R2 <= I(Y1;X1,X2)\n"
        "R1 + R2 <= I(Y2;X1,X2)\n"}},
      {DmRegion::InnerBinning,
       {{R::U1c, R::X1, R::X2},
        joint_of({R::U1c, R::X1, R::X2}),
        "R1 <= I(Y1;U1c) - I(U1c;X2)\n"
        "R1 <= I(Y2;X1|X2)\n"
        "R1 + R2 <= I(Y2;X1,X2)\n"
        "R1 + R2 <= I(Y1;U1c) + I(Y2;X2|U1c)\n"}},
      {DmRegion::SemidetCap,
       {{R::X1, R::X2},
        joint_of({R::X1, R::X2}),
        "R1 <= H(Y1|X2)\n"
        "R1 <= I(Y2;X1|X2)\n"
        "R1 + R2 <= I(Y2;X1,X2)\n"}},
  };
  return t;
}

}  // namespace

const std::vector<DmRegion>& all_dm_regions() {
  static const std::vector<DmRegion> r{DmRegion::OuterThm1,    DmRegion::Outer1Rv,
                                       DmRegion::Outer3Rv,     DmRegion::OuterBcDms,
                                       DmRegion::InnerGeneral, DmRegion::InnerSuperpos,
                                       DmRegion::InnerBinning, DmRegion::SemidetCap};
  return r;
}

std::string region_name(DmRegion r) {
  switch (r) {
    case DmRegion::OuterThm1: return "OUTER_THM1";
    case DmRegion::Outer1Rv: return "OUTER_1RV";
    case DmRegion::Outer3Rv: return "OUTER_3RV";
    case DmRegion::OuterBcDms: return "OUTER_BCDMS";
    case DmRegion::InnerGeneral: return "INNER_GENERAL";
    case DmRegion::InnerSuperpos: return "INNER_SUPERPOS";
    case DmRegion::InnerBinning: return "INNER_BINNING";
    case DmRegion::SemidetCap: return "SEMIDET_CAP";
  }
  return "?";
}

std::optional<DmRegion> parse_dm_region(const std::string& name) {
  for (DmRegion r : all_dm_regions())
    if (region_name(r) == name) return r;
  return std::nullopt;
}

const RegionInfo& region_info(DmRegion r) { return table().at(r); }

const algebra::InequalitySystem& region_system(DmRegion r) {
  static std::once_flag once;
  static std::map<DmRegion, algebra::InequalitySystem> parsed;
  std::call_once(once, [] {
    for (const auto& [id, info] : table()) parsed.emplace(id, algebra::parse_system(info.text));
  });
  return parsed.at(r);
}

geom::BoundSet eval_dm_region(DmRegion region, const DmChannel& ch,
                              const JointDistribution& dist) {
  const RegionInfo& info = region_info(region);
  const std::string name = region_name(region);
  dist.validate();
  for (Role r : info.roles)
    if (!dist.has(r))
      throw std::invalid_argument(name + ": distribution is missing role " + role_name(r));
  for (Role r : dist.roles)
    if (std::find(info.roles.begin(), info.roles.end(), r) == info.roles.end())
      throw std::invalid_argument(name + ": role " + role_name(r) + " is not used by the region");
  if (region == DmRegion::SemidetCap && !ch.is_semideterministic())
    throw std::invalid_argument(name + ": Y1 is not a deterministic function of the inputs");
  const double dev = factorization_deviation(dist, info.factorization);
  if (dev > kFactorizationTol)
    throw FactorizationError(name + ": distribution violates " + info.factorization.str() +
                                 " (total-variation deviation " + std::to_string(dev) + ")",
                             dev);

  const Pmf joint = induce_outputs(ch, dist);
  const auto& sys = region_system(region);
  std::map<std::string, double> values;
  for (const auto& a : sys.atoms.list()) values[a.name] = evaluate_info_atom(joint, a.name);

  geom::BoundSet out;
  for (const auto& row : sys.inequalities) {
    geom::BoundEntry e;
    auto c1 = row.lhs.find("R1");
    auto c2 = row.lhs.find("R2");
    e.c1 = c1 == row.lhs.end() ? 0.0 : c1->second.get_d();
    e.c2 = c2 == row.lhs.end() ? 0.0 : c2->second.get_d();
    e.value = row.rhs.evaluate(values);
    e.source = name + ": " + algebra::format_inequality(row);
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace rrk::dm
