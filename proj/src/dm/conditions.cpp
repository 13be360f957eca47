#include "rrk/dm/conditions.hpp"

#include <cmath>
#include <stdexcept>

#include "rrk/dm/pmf.hpp"

namespace rrk::dm {

std::string condition_name(ConditionKind k) {
  switch (k) {
    case ConditionKind::StrongInt: return "STRONG_INT";
    case ConditionKind::Vsi: return "VSI";
    case ConditionKind::PdcA: return "PDC_A";
    case ConditionKind::PdcB: return "PDC_B";
    case ConditionKind::Semidet: return "SEMIDET";
  }
  return "?";
}

std::optional<ConditionKind> parse_condition(const std::string& name) {
  for (auto k : {ConditionKind::StrongInt, ConditionKind::Vsi, ConditionKind::PdcA,
                 ConditionKind::PdcB, ConditionKind::Semidet})
    if (condition_name(k) == name) return k;
  return std::nullopt;
}

ConditionReport check_conditions_dm(ConditionKind kind, const DmChannel& ch,
                                    const std::optional<JointDistribution>& dist, double tol) {
  ch.validate();
  ConditionReport rep;
  rep.kind = kind;
  if (kind == ConditionKind::Semidet) {
    rep.holds = ch.is_semideterministic();
    rep.expression = "P(y1|x1,x2) is a point mass for every (x1,x2)";
    return rep;
  }
  if (!dist) throw std::invalid_argument(condition_name(kind) + " needs a distribution");
  dist->validate();
  const bool pdc = kind == ConditionKind::PdcA || kind == ConditionKind::PdcB;
  if (pdc) {
    if (!dist->has(Role::U))
      throw std::invalid_argument(condition_name(kind) + " needs role U");
    Factorization f{{{{Role::U}, {}}, {{Role::X2}, {}}, {{Role::X1}, {Role::U, Role::X2}}}};
    // Other roles, if any, are marginalized first.
    JointDistribution d = *dist;
    if (d.roles.size() != 3) {
      Pmf m = d.as_pmf().marginal({"U", "X1", "X2"});
      d = {{Role::U, Role::X1, Role::X2}, m.sizes(), m.probs()};
    }
    const double dev = factorization_deviation(d, f);
    if (dev > kFactorizationTol)
      throw std::invalid_argument(condition_name(kind) + ": distribution violates " + f.str() +
                                  " (total-variation deviation " + std::to_string(dev) + ")");
    rep.note =
        "checked for the supplied distribution only; the condition is required for every "
        "distribution of this product form, which is untested";
  }
  const Pmf joint = induce_outputs(ch, *dist);
  switch (kind) {
    case ConditionKind::StrongInt:
      rep.expression = "I(Y1;X1|X2) - I(Y2;X1|X2)";
      rep.slack = joint.mutual_information({"Y1"}, {"X1"}, {"X2"}) -
                  joint.mutual_information({"Y2"}, {"X1"}, {"X2"});
      rep.holds = rep.slack <= tol;
      break;
    case ConditionKind::Vsi:
      rep.expression = "I(Y2;X1,X2) - I(Y1;X1,X2)";
      rep.slack = joint.mutual_information({"Y2"}, {"X1", "X2"}) -
                  joint.mutual_information({"Y1"}, {"X1", "X2"});
      rep.holds = rep.slack <= tol;
      break;
    case ConditionKind::PdcA:
      rep.expression = "I(Y1;U) - I(Y2;U)";
      rep.slack = joint.mutual_information({"Y1"}, {"U"}) - joint.mutual_information({"Y2"}, {"U"});
      rep.holds = rep.slack >= -tol;
      break;
    case ConditionKind::PdcB:
      rep.expression = "I(U;X2|Y1)";
      rep.slack = joint.mutual_information({"U"}, {"X2"}, {"Y1"});
      rep.holds = std::fabs(rep.slack) <= tol;
      break;
    case ConditionKind::Semidet: break;
  }
  return rep;
}

}  // namespace rrk::dm
