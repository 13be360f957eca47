// Numeric values for information atoms drawn from actual distributions.
//
// Values obtained this way satisfy every Shannon-type relation between the
// atoms, which makes them suitable for re-checking redundancy certificates.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rrk/algebra/pipeline.hpp"
#include "rrk/dm/pmf.hpp"

namespace rrk::dm {

// Random variables mentioned by the atoms, e.g. {"U1c", "X2", "Y1"}.
std::set<std::string> atom_variables(const std::vector<std::string>& atoms);

std::map<std::string, double> evaluate_atoms(const Pmf& pmf, const std::vector<std::string>& atoms);

// Evaluates the atoms on a random joint pmf over their variables, each with
// `alphabet` symbols.
std::map<std::string, double> random_atom_values(const std::vector<std::string>& atoms,
                                                 std::mt19937_64& rng, int alphabet = 2);

struct CertificateCheck {
  std::size_t certificates = 0;
  std::size_t assignments = 0;
  std::size_t violations = 0;  // (certificate, assignment) pairs with slack < -tol
  double worst_slack = 0;
  bool ok() const { return violations == 0; }
};

// Re-checks every pruning certificate of the projection: the lhs identity
// exactly and the rhs slack on `samples` random distributions. All atoms must
// be information expressions.
CertificateCheck verify_certificates(const algebra::ProjectionResult& res, std::size_t samples,
                                     std::uint64_t seed, double tol = 1e-9);

}  // namespace rrk::dm
