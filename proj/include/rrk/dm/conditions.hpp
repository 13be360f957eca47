// Regime conditions of the discrete-memoryless channel.
#pragma once

#include <optional>
#include <string>

#include "rrk/dm/channel.hpp"

namespace rrk::dm {

enum class ConditionKind { StrongInt, Vsi, PdcA, PdcB, Semidet };

std::string condition_name(ConditionKind k);  // "STRONG_INT", ...
std::optional<ConditionKind> parse_condition(const std::string& name);

struct ConditionReport {
  ConditionKind kind{};
  bool holds = false;
  double slack = 0;  // lhs - rhs in bits; 0 for SEMIDET
  std::string expression;
  std::string note;
};

// Slacks:
//   STRONG_INT  I(Y1;X1|X2) - I(Y2;X1|X2), holds when <= tol
//   VSI         I(Y2;X1,X2) - I(Y1;X1,X2), holds when <= tol
//   PDC_A       I(Y1;U) - I(Y2;U),         holds when >= -tol
//   PDC_B       I(U;X2|Y1),                holds when <= tol
// PDC checks require the product form P(U) P(X2) P(X1|U,X2). SEMIDET ignores
// the distribution. Throws std::invalid_argument when a needed distribution
// or role is missing.
ConditionReport check_conditions_dm(ConditionKind kind, const DmChannel& ch,
                                    const std::optional<JointDistribution>& dist,
                                    double tol = 1e-10);

}  // namespace rrk::dm
