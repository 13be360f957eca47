// Lattice grids of joint distributions that respect a factorization.
#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "rrk/dm/channel.hpp"

namespace rrk::dm {

struct DistributionGrid {
  double step = 0.1;                  // lattice spacing 1/n, in (0, 1]
  std::map<Role, int> sizes;          // alphabet sizes; auxiliaries default to max(|X1|, |X2|)
  std::size_t budget = 2'000'000;     // largest number of grid members accepted
};

class BudgetError : public std::runtime_error {
 public:
  BudgetError(double required, std::size_t budget);
  double required() const { return required_; }

 private:
  double required_;
};

// Every conditional pmf of the factorization ranges independently over the
// simplex lattice {k/n}; members are the resulting products.
class GridEnumerator {
 public:
  GridEnumerator(std::vector<Role> roles, std::vector<int> sizes, Factorization f, double step,
                 std::size_t budget);

  std::size_t size() const { return count_; }
  JointDistribution member(std::size_t index) const;
  int lattice_denominator() const { return n_; }

 private:
  struct Slot {
    std::size_t factor;
    std::size_t given_cfg;
  };
  std::vector<Role> roles_;
  std::vector<int> sizes_;
  Factorization f_;
  int n_ = 1;
  std::vector<std::vector<std::vector<int>>> lattice_;  // per factor: compositions of n
  std::vector<Slot> slots_;
  std::size_t count_ = 0;
};

// Lattice size for a given step: n = round(1 / step). Throws for steps
// outside (0, 1] or not of the form 1/n within 1e-9.
int lattice_denominator(double step);

// Number of compositions of n into k nonnegative parts.
double simplex_lattice_size(int n, int k);

// Grid for the roles and factorization a region needs.
GridEnumerator make_grid(const std::vector<Role>& roles, const Factorization& f,
                         const DmChannel& ch, const DistributionGrid& grid);

}  // namespace rrk::dm
