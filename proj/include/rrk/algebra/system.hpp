// Linear rate inequalities whose right-hand sides are affine in named
// information atoms. All coefficients are exact rationals.
#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrk::algebra {

using Rational = mpq_class;

// Sparse linear form; zero coefficients are never stored.
using LinearForm = std::map<std::string, Rational>;

void add_scaled(LinearForm& dst, const LinearForm& src, const Rational& k);
bool is_zero(const LinearForm& f);

struct Atom {
  std::string name;
  bool nonneg = true;
};

class AtomRegistry {
 public:
  // Throws std::invalid_argument when the name exists with the other flag.
  void declare(const std::string& name, bool nonneg = true);
  void merge(const AtomRegistry& other);

  bool contains(const std::string& name) const { return atoms_.count(name) != 0; }
  bool nonneg(const std::string& name) const;
  std::vector<Atom> list() const;
  std::size_t size() const { return atoms_.size(); }

 private:
  std::map<std::string, bool> atoms_;
};

struct AffineBound {
  LinearForm terms;
  Rational constant = 0;

  AffineBound& operator+=(const AffineBound& o);
  AffineBound& operator-=(const AffineBound& o);
  AffineBound& operator*=(const Rational& k);
  bool operator==(const AffineBound& o) const {
    return terms == o.terms && constant == o.constant;
  }
  double evaluate(const std::map<std::string, double>& values) const;
  Rational evaluate(const std::map<std::string, Rational>& values) const;
};

AffineBound operator+(AffineBound a, const AffineBound& b);
AffineBound operator-(AffineBound a, const AffineBound& b);
AffineBound operator*(const Rational& k, AffineBound a);

// lhs <= rhs. An empty lhs is a pure condition on the atoms ("0 <= rhs").
struct RateInequality {
  LinearForm lhs;
  AffineBound rhs;

  bool operator==(const RateInequality& o) const {
    return lhs == o.lhs && rhs == o.rhs;
  }
  bool operator<(const RateInequality& o) const;
};

// lhs == rhs; produced by rate-splitting definitions.
struct LinearEquality {
  LinearForm lhs;
  AffineBound rhs;
  bool operator==(const LinearEquality& o) const {
    return lhs == o.lhs && rhs == o.rhs;
  }
};

// dominant >= dominated for every admissible atom assignment.
struct AtomRelation {
  AffineBound dominant;
  AffineBound dominated;
};

// var = sum of vars
struct Definition {
  std::string var;
  std::vector<std::string> summands;
};

struct InequalitySystem {
  std::vector<RateInequality> inequalities;
  std::vector<LinearEquality> equalities;
  AtomRegistry atoms;

  std::set<std::string> variables() const;
  bool mentions(const std::string& var) const;
  bool empty() const { return inequalities.empty() && equalities.empty(); }
};

// Scales lhs to coprime integer coefficients (positive factor). For an empty
// lhs the rhs is scaled instead.
RateInequality normalize(RateInequality ineq);
LinearEquality normalize(LinearEquality eq);

// Normalizes every row, removes duplicates and "0 <= c" rows with c >= 0
// constant, and sorts. Result is deterministic.
InequalitySystem canonicalize(InequalitySystem sys);

// Registers every atom referenced in rows and relations that is not yet
// declared (as nonnegative).
void register_atoms(InequalitySystem& sys);

bool holds(const RateInequality& ineq, const std::map<std::string, Rational>& point,
           const std::map<std::string, Rational>& atom_values);

// Sets the given variable to zero in every row.
InequalitySystem set_zero(const InequalitySystem& sys, const std::string& var);

std::string to_string(const Rational& q);

}  // namespace rrk::algebra
