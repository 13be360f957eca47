// Sampled upper boundaries of rate regions and comparisons between them.
#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rrk/geometry/bound_set.hpp"
#include "rrk/geometry/parallel.hpp"

namespace rrk::geom {

struct Frontier {
  std::vector<double> r1;  // strictly increasing, starts at 0
  std::vector<double> r2;  // nonincreasing, >= 0
  std::string tag;

  std::size_t size() const { return r1.size(); }
  bool empty() const { return r1.empty(); }
  double r1_max() const { return r1.empty() ? 0.0 : r1.back(); }
  double r2_max() const { return r2.empty() ? 0.0 : r2.front(); }
  // Linear interpolation; negative beyond r1_max().
  double r2_at(double x) const;
  bool contains(double x, double y) const;
};

// Throws std::logic_error if the ordering or sign invariants fail.
void check_frontier(const Frontier& f);

struct R1Grid {
  std::size_t samples = 201;
  std::optional<double> upper;  // default: the union's largest R1
};

// Pointwise maximum of member R2 limits. Samples are linspace(0, upper)
// restricted to the union's R1 range, followed by that range's end point.
Frontier frontier_from_bound_sets(const std::vector<BoundSet>& members, const R1Grid& grid,
                                  std::string tag = {});

template <class Param, class Eval>
Frontier frontier_from_family(const Eval& eval, const std::vector<Param>& params,
                              const R1Grid& grid, std::string tag = {}) {
  std::vector<BoundSet> members(params.size());
  parallel_for(params.size(), [&](std::size_t i) { members[i] = eval(params[i]); });
  return frontier_from_bound_sets(members, grid, std::move(tag));
}

// Same result as frontier_from_bound_sets over {gen(0), ..., gen(count-1)},
// evaluated in chunks so the members never all live in memory at once.
// gen is called twice per index and must be deterministic and thread-safe.
Frontier frontier_from_generator(std::size_t count,
                                 const std::function<BoundSet(std::size_t)>& gen,
                                 const R1Grid& grid, std::string tag = {},
                                 std::size_t chunk = 4096);

// Pointwise maximum of frontiers sampled on the same grid.
Frontier frontier_union(const std::vector<Frontier>& parts, std::string tag = {});

Frontier concave_envelope(const Frontier& f);

struct ContainmentReport {
  bool contained = true;
  double max_violation = 0;  // max of inner R2 - outer R2 over compared samples
  double worst_r1 = 0;
  std::size_t compared = 0;
};

ContainmentReport region_contains(const Frontier& outer, const Frontier& inner, double tol);

struct GapReport {
  double additive = 0;
  double multiplicative = 1;
  std::pair<double, double> additive_witness{0, 0};
  std::pair<double, double> multiplicative_witness{0, 0};
};

GapReport gap_between(const Frontier& outer, const Frontier& inner);

void write_frontier_csv(std::ostream& os, const Frontier& f);
void write_frontiers_csv(std::ostream& os, const std::vector<Frontier>& fs);

}  // namespace rrk::geom
