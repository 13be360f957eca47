// Finite joint pmfs over named variables and information measures in bits.
#pragma once

#include <random>
#include <string>
#include <vector>

namespace rrk::dm {

// Row-major table; the last variable varies fastest.
class Pmf {
 public:
  Pmf() = default;
  Pmf(std::vector<std::string> names, std::vector<int> sizes, std::vector<double> p);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<double>& probs() const { return p_; }
  std::size_t index_of(const std::string& name) const;  // throws std::out_of_range
  bool has(const std::string& name) const;
  int size_of(const std::string& name) const { return sizes_[index_of(name)]; }

  // Marginal over the given variables (in the given order).
  Pmf marginal(const std::vector<std::string>& keep) const;
  double entropy(const std::vector<std::string>& vars) const;
  double conditional_entropy(const std::vector<std::string>& vars,
                             const std::vector<std::string>& given) const;
  // I(left; right | given); the three sets must be disjoint. Clamped at 0.
  double mutual_information(const std::vector<std::string>& left,
                            const std::vector<std::string>& right,
                            const std::vector<std::string>& given = {}) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> sizes_;
  std::vector<double> p_;
};

// Evaluates "I(A;B|C)" or "H(A|B)" on the pmf.
double evaluate_info_atom(const Pmf& pmf, const std::string& atom);

// Joint pmf with i.i.d. exponential weights, normalized.
Pmf random_pmf(const std::vector<std::string>& names, const std::vector<int>& sizes,
               std::mt19937_64& rng);

double binary_entropy(double p);

}  // namespace rrk::dm
