#include "rrk/algebra/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "rrk/algebra/fme.hpp"

namespace rrk::algebra {

ProjectionResult run_projection(const InequalitySystem& input, const ProjectionPlan& plan) {
  ProjectionResult res;
  InequalitySystem sys = canonicalize(input);
  auto record = [&](std::string action) {
    ProjectionStep step;
    step.action = std::move(action);
    if (plan.reduce) {
      Reduction red = reduce_redundant_certified(sys, plan.relations);
      sys = red.system;
      step.removed = std::move(red.removed);
    }
    step.system = sys;
    res.steps.push_back(std::move(step));
  };

  for (const auto& v : plan.set_zero) {
    sys = set_zero(sys, v);
    record("set " + v + " = 0");
  }
  for (const auto& v : plan.eliminate) {
    sys = fme_eliminate(sys, v);
    record("eliminate " + v);
  }
  for (const auto& d : plan.definitions) {
    sys = substitute(sys, d);
    record("substitute " + format_definition(d));
  }
  for (const auto& d : plan.definitions)
    for (const auto& s : d.summands) {
      sys = fme_eliminate(sys, s);
      record("eliminate " + s);
    }
  res.system = sys;
  return res;
}

Definition parse_definition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
    throw std::invalid_argument("definition must look like VAR=VAR+VAR..., got '" + text + "'");
  Definition d;
  d.var = s.substr(0, eq);
  std::stringstream rest(s.substr(eq + 1));
  std::string part;
  while (std::getline(rest, part, '+')) {
    if (part.empty()) throw std::invalid_argument("empty summand in '" + text + "'");
    d.summands.push_back(part);
  }
  std::vector<std::string> names = d.summands;
  names.push_back(d.var);
  for (const auto& n : names)
    if (!default_rate_variables().count(n))
      throw std::invalid_argument("unknown variable '" + n + "' in definition");
  return d;
}

}  // namespace rrk::algebra
