// A fixed sequence of projection steps, each followed by certified pruning.
#pragma once

#include <string>
#include <vector>

#include "rrk/algebra/parse.hpp"
#include "rrk/algebra/redundancy.hpp"

namespace rrk::algebra {

struct ProjectionPlan {
  std::vector<std::string> set_zero;
  std::vector<std::string> eliminate;
  // Applied after the eliminations; each summand is then projected out.
  std::vector<Definition> definitions;
  std::vector<AtomRelation> relations;
  bool reduce = true;
};

struct ProjectionStep {
  std::string action;          // e.g. "eliminate R2c"
  InequalitySystem system;     // after pruning
  std::vector<Removal> removed;  // certificates refer to `system`
};

struct ProjectionResult {
  InequalitySystem system;
  std::vector<ProjectionStep> steps;
};

// Order: set_zero, eliminate, then all definitions followed by elimination of
// their summands in order of appearance.
ProjectionResult run_projection(const InequalitySystem& input, const ProjectionPlan& plan);

// "R2=R2c+R2p+R2pb"
Definition parse_definition(const std::string& text);

}  // namespace rrk::algebra
