#include "rrk/algebra/fme.hpp"

#include <set>
#include <stdexcept>

namespace rrk::algebra {

namespace {

InequalitySystem eliminate_by_equality(const InequalitySystem& sys, std::size_t k,
                                       const std::string& var) {
  const LinearEquality& pivot = sys.equalities[k];
  const Rational a = pivot.lhs.at(var);
  InequalitySystem out;
  out.atoms = sys.atoms;
  // row -= (row[var] / a) * pivot
  for (const auto& r : sys.inequalities) {
    auto it = r.lhs.find(var);
    if (it == r.lhs.end()) {
      out.inequalities.push_back(r);
      continue;
    }
    Rational f = it->second / a;
    RateInequality n = r;
    add_scaled(n.lhs, pivot.lhs, -f);
    n.rhs -= f * pivot.rhs;
    out.inequalities.push_back(std::move(n));
  }
  for (std::size_t i = 0; i < sys.equalities.size(); ++i) {
    if (i == k) continue;
    const auto& e = sys.equalities[i];
    auto it = e.lhs.find(var);
    if (it == e.lhs.end()) {
      out.equalities.push_back(e);
      continue;
    }
    Rational f = it->second / a;
    LinearEquality n = e;
    add_scaled(n.lhs, pivot.lhs, -f);
    n.rhs -= f * pivot.rhs;
    out.equalities.push_back(std::move(n));
  }
  return canonicalize(std::move(out));
}

}  // namespace

InequalitySystem fme_eliminate(const InequalitySystem& sys, const std::string& var) {
  if (!sys.mentions(var)) return sys;
  for (std::size_t k = 0; k < sys.equalities.size(); ++k)
    if (sys.equalities[k].lhs.count(var)) return eliminate_by_equality(sys, k, var);

  InequalitySystem out;
  out.atoms = sys.atoms;
  out.equalities = sys.equalities;
  std::vector<const RateInequality*> pos, neg;
  for (const auto& r : sys.inequalities) {
    auto it = r.lhs.find(var);
    if (it == r.lhs.end()) {
      out.inequalities.push_back(r);
    } else if (it->second > 0) {
      pos.push_back(&r);
    } else {
      neg.push_back(&r);
    }
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) {
      Rational cp = p->lhs.at(var);
      Rational cq = -q->lhs.at(var);
      RateInequality n;
      add_scaled(n.lhs, p->lhs, cq);
      add_scaled(n.lhs, q->lhs, cp);
      n.lhs.erase(var);
      n.rhs = cq * p->rhs + cp * q->rhs;
      out.inequalities.push_back(std::move(n));
    }
  }
  return canonicalize(std::move(out));
}

InequalitySystem fme_eliminate_all(InequalitySystem sys, const std::vector<std::string>& vars) {
  for (const auto& v : vars) sys = fme_eliminate(sys, v);
  return sys;
}

InequalitySystem substitute(const InequalitySystem& sys, const Definition& def) {
  if (sys.empty()) return sys;
  if (def.summands.empty()) throw std::invalid_argument("definition of '" + def.var + "' is empty");
  if (sys.mentions(def.var))
    throw std::invalid_argument("'" + def.var + "' already occurs in the system");
  std::set<std::string> seen;
  for (const auto& s : def.summands) {
    if (s == def.var) throw std::invalid_argument("'" + def.var + "' defined in terms of itself");
    if (!sys.mentions(s)) throw std::invalid_argument("unknown variable '" + s + "' in definition");
    if (!seen.insert(s).second) throw std::invalid_argument("repeated summand '" + s + "'");
  }
  InequalitySystem out = sys;
  LinearEquality e;
  e.lhs[def.var] = 1;
  for (const auto& s : def.summands) e.lhs[s] = -1;
  out.equalities.push_back(std::move(e));
  return canonicalize(std::move(out));
}

}  // namespace rrk::algebra
