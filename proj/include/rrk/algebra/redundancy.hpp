// Relation-certified pruning of implied inequalities.
//
// An inequality  L x <= b  is dropped only with a certificate
//   L = sum_i w_i L_i + sum_m e_m E_m
//   b - sum_i w_i b_i - sum_m e_m c_m = sum_j u_j (dominant_j - dominated_j)
//                                       + sum_a v_a atom_a + v_0
// with w, u, v >= 0 (v only on nonnegative atoms) and e free, where the
// L_i <= b_i are kept inequalities and E_m = c_m the system's equalities.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrk/algebra/system.hpp"

namespace rrk::algebra {

struct Certificate {
  std::vector<Rational> ineq_weights;      // over the kept inequalities
  std::vector<Rational> equality_weights;  // over the system's equalities
  std::vector<Rational> relation_weights;  // over the supplied relations
  std::map<std::string, Rational> atom_slack;
  Rational constant_slack = 0;
};

struct Removal {
  RateInequality inequality;
  Certificate certificate;
};

struct Reduction {
  InequalitySystem system;
  std::vector<Removal> removed;
};

// Returns the certificate if `target` follows from the inequalities and
// equalities of `sys`, the relations and atom nonnegativity.
std::optional<Certificate> find_implication(const InequalitySystem& sys,
                                            const RateInequality& target,
                                            const std::vector<AtomRelation>& relations);

inline bool implies(const InequalitySystem& sys, const RateInequality& target,
                    const std::vector<AtomRelation>& relations) {
  return find_implication(sys, target, relations).has_value();
}

// Removes duplicates and every inequality implied by the others, longest rows
// first. Certificates in the result refer to `result.system`.
Reduction reduce_redundant_certified(const InequalitySystem& sys,
                                     const std::vector<AtomRelation>& relations);

InequalitySystem reduce_redundant(const InequalitySystem& sys,
                                  const std::vector<AtomRelation>& relations);

// Re-checks a certificate: the lhs identity exactly, the rhs slack at the
// given atom values (which must satisfy the relations). Returns the slack.
double certificate_slack(const InequalitySystem& kept, const RateInequality& target,
                         const Certificate& cert,
                         const std::map<std::string, double>& atom_values);

bool certificate_lhs_exact(const InequalitySystem& kept, const RateInequality& target,
                           const Certificate& cert);

struct MatchReport {
  std::vector<RateInequality> missing_from_b;  // rows of A not implied by B
  std::vector<RateInequality> missing_from_a;  // rows of B not implied by A
  bool match() const { return missing_from_a.empty() && missing_from_b.empty(); }
};

MatchReport systems_match(const InequalitySystem& a, const InequalitySystem& b,
                          const std::vector<AtomRelation>& relations);

}  // namespace rrk::algebra
