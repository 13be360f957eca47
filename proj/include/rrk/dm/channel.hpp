// Finite-alphabet channel laws and role-tagged joint distributions.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rrk/dm/pmf.hpp"

namespace rrk::dm {

// P(y1, y2 | x1, x2), flat index ((x1 * nx2 + x2) * ny1 + y1) * ny2 + y2.
struct DmChannel {
  int nx1 = 0, nx2 = 0, ny1 = 0, ny2 = 0;
  std::vector<double> p;

  double at(int x1, int x2, int y1, int y2) const {
    return p[((static_cast<std::size_t>(x1) * nx2 + x2) * ny1 + y1) * ny2 + y2];
  }
  // Throws std::invalid_argument unless every (x1, x2) slice is a pmf (1e-12).
  void validate() const;
  // Y1 is a deterministic function of (X1, X2).
  bool is_semideterministic(double tol = 1e-12) const;

  static DmChannel tabulate(int nx1, int nx2, int ny1, int ny2,
                            const std::function<double(int, int, int, int)>& law);
};

enum class Role { U, V, U1, U2, U1c, U2c, U2pb, X1, X2 };

const std::vector<Role>& all_roles();
std::string role_name(Role r);
std::optional<Role> parse_role(const std::string& name);

struct JointDistribution {
  std::vector<Role> roles;
  std::vector<int> sizes;
  std::vector<double> p;  // row-major over roles, last fastest

  void validate() const;  // shape, nonnegativity, total mass 1 within 1e-12
  bool has(Role r) const;
  int size_of(Role r) const;
  Pmf as_pmf() const;
};

// Joint pmf of the roles together with Y1 and Y2:
// P(roles, y1, y2) = P(roles) * P(y1, y2 | x1, x2).
Pmf induce_outputs(const DmChannel& ch, const JointDistribution& dist);

// P(target | given); an empty `given` means a marginal.
struct Factor {
  std::vector<Role> target;
  std::vector<Role> given;
};

struct Factorization {
  std::vector<Factor> factors;  // every role appears as a target exactly once
  std::string str() const;
};

// Total-variation distance between dist and the product of its own
// conditionals along the factorization.
double factorization_deviation(const JointDistribution& dist, const Factorization& f);

inline constexpr double kFactorizationTol = 1e-9;

}  // namespace rrk::dm
