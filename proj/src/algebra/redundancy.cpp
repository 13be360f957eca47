#include "rrk/algebra/redundancy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rrk/algebra/simplex.hpp"

namespace rrk::algebra {

namespace {

bool atom_is_nonneg(const AtomRegistry& reg, const std::string& name) {
  return !reg.contains(name) || reg.nonneg(name);
}

std::size_t weight(const RateInequality& r) {
  Rational s = 0;
  for (const auto& [v, c] : r.lhs) s += abs(c);
  return r.lhs.size() * 1000 + static_cast<std::size_t>(s.get_d()) * 10 + r.rhs.terms.size();
}

}  // namespace

std::optional<Certificate> find_implication(const InequalitySystem& sys,
                                            const RateInequality& target,
                                            const std::vector<AtomRelation>& relations) {
  const auto& rows = sys.inequalities;
  const auto& eqs = sys.equalities;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == target) {
      Certificate c;
      c.ineq_weights.assign(rows.size(), 0);
      c.ineq_weights[i] = 1;
      c.equality_weights.assign(eqs.size(), 0);
      c.relation_weights.assign(relations.size(), 0);
      return c;
    }
  }

  std::set<std::string> vars, atoms;
  auto note_rhs = [&](const AffineBound& b) {
    for (const auto& [a, c] : b.terms) atoms.insert(a);
  };
  for (const auto& r : rows) {
    for (const auto& [v, c] : r.lhs) vars.insert(v);
    note_rhs(r.rhs);
  }
  for (const auto& e : eqs) {
    for (const auto& [v, c] : e.lhs) vars.insert(v);
    note_rhs(e.rhs);
  }
  for (const auto& [v, c] : target.lhs) vars.insert(v);
  note_rhs(target.rhs);
  std::vector<AffineBound> diffs;
  for (const auto& rel : relations) {
    diffs.push_back(rel.dominant - rel.dominated);
    note_rhs(diffs.back());
  }
  std::vector<std::string> slack_atoms;
  for (const auto& a : atoms)
    if (atom_is_nonneg(sys.atoms, a)) slack_atoms.push_back(a);

  const std::size_t nI = rows.size(), nE = eqs.size(), nR = diffs.size();
  const std::size_t nS = slack_atoms.size();
  const std::size_t cols = nI + 2 * nE + nR + nS + 1;
  std::map<std::string, std::size_t> var_row, atom_row;
  std::size_t m = 0;
  for (const auto& v : vars) var_row[v] = m++;
  for (const auto& a : atoms) atom_row[a] = m++;
  const std::size_t const_row = m++;

  RationalMatrix A(m, std::vector<Rational>(cols, 0));
  std::vector<Rational> b(m, 0);
  auto put_rhs = [&](std::size_t col, const AffineBound& rhs, int sign) {
    for (const auto& [a, c] : rhs.terms) A[atom_row[a]][col] += sign * c;
    A[const_row][col] += sign * rhs.constant;
  };
  for (std::size_t i = 0; i < nI; ++i) {
    for (const auto& [v, c] : rows[i].lhs) A[var_row[v]][i] = c;
    put_rhs(i, rows[i].rhs, 1);
  }
  for (std::size_t k = 0; k < nE; ++k) {
    std::size_t cp = nI + 2 * k, cn = cp + 1;
    for (const auto& [v, c] : eqs[k].lhs) {
      A[var_row[v]][cp] = c;
      A[var_row[v]][cn] = -c;
    }
    put_rhs(cp, eqs[k].rhs, 1);
    put_rhs(cn, eqs[k].rhs, -1);
  }
  for (std::size_t j = 0; j < nR; ++j) put_rhs(nI + 2 * nE + j, diffs[j], 1);
  for (std::size_t s = 0; s < nS; ++s) A[atom_row[slack_atoms[s]]][nI + 2 * nE + nR + s] = 1;
  A[const_row][cols - 1] = 1;

  for (const auto& [v, c] : target.lhs) b[var_row[v]] = c;
  for (const auto& [a, c] : target.rhs.terms) b[atom_row[a]] = c;
  b[const_row] = target.rhs.constant;

  auto x = find_nonnegative_solution(A, b);
  if (!x) return std::nullopt;
  Certificate cert;
  cert.ineq_weights.assign(x->begin(), x->begin() + nI);
  for (std::size_t k = 0; k < nE; ++k)
    cert.equality_weights.push_back((*x)[nI + 2 * k] - (*x)[nI + 2 * k + 1]);
  for (std::size_t j = 0; j < nR; ++j) cert.relation_weights.push_back((*x)[nI + 2 * nE + j]);
  for (std::size_t s = 0; s < nS; ++s) {
    const Rational& v = (*x)[nI + 2 * nE + nR + s];
    if (v != 0) cert.atom_slack[slack_atoms[s]] = v;
  }
  cert.constant_slack = (*x)[cols - 1];
  return cert;
}

Reduction reduce_redundant_certified(const InequalitySystem& sys,
                                     const std::vector<AtomRelation>& relations) {
  InequalitySystem base = canonicalize(sys);
  std::vector<std::size_t> order(base.inequalities.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weight(base.inequalities[a]) > weight(base.inequalities[b]);
  });

  std::vector<bool> kept(base.inequalities.size(), true);
  std::vector<std::size_t> dropped;
  for (std::size_t idx : order) {
    InequalitySystem others;
    others.atoms = base.atoms;
    others.equalities = base.equalities;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (kept[i] && i != idx) others.inequalities.push_back(base.inequalities[i]);
    if (implies(others, base.inequalities[idx], relations)) {
      kept[idx] = false;
      dropped.push_back(idx);
    }
  }

  Reduction red;
  red.system.atoms = base.atoms;
  red.system.equalities = base.equalities;
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (kept[i]) red.system.inequalities.push_back(base.inequalities[i]);
  for (std::size_t idx : dropped) {
    auto cert = find_implication(red.system, base.inequalities[idx], relations);
    if (!cert) throw std::logic_error("redundancy certificate lost after reduction");
    red.removed.push_back({base.inequalities[idx], std::move(*cert)});
  }
  return red;
}

InequalitySystem reduce_redundant(const InequalitySystem& sys,
                                  const std::vector<AtomRelation>& relations) {
  return reduce_redundant_certified(sys, relations).system;
}

bool certificate_lhs_exact(const InequalitySystem& kept, const RateInequality& target,
                           const Certificate& cert) {
  if (cert.ineq_weights.size() != kept.inequalities.size() ||
      cert.equality_weights.size() != kept.equalities.size())
    return false;
  LinearForm sum;
  for (std::size_t i = 0; i < kept.inequalities.size(); ++i) {
    if (cert.ineq_weights[i] < 0) return false;
    add_scaled(sum, kept.inequalities[i].lhs, cert.ineq_weights[i]);
  }
  for (std::size_t k = 0; k < kept.equalities.size(); ++k)
    add_scaled(sum, kept.equalities[k].lhs, cert.equality_weights[k]);
  return sum == target.lhs;
}

double certificate_slack(const InequalitySystem& kept, const RateInequality& target,
                         const Certificate& cert,
                         const std::map<std::string, double>& atom_values) {
  double slack = target.rhs.evaluate(atom_values);
  for (std::size_t i = 0; i < kept.inequalities.size(); ++i)
    if (cert.ineq_weights[i] != 0)
      slack -= cert.ineq_weights[i].get_d() * kept.inequalities[i].rhs.evaluate(atom_values);
  for (std::size_t k = 0; k < kept.equalities.size(); ++k)
    if (cert.equality_weights[k] != 0)
      slack -= cert.equality_weights[k].get_d() * kept.equalities[k].rhs.evaluate(atom_values);
  return slack;
}

MatchReport systems_match(const InequalitySystem& a, const InequalitySystem& b,
                          const std::vector<AtomRelation>& relations) {
  InequalitySystem ra = reduce_redundant(a, relations);
  InequalitySystem rb = reduce_redundant(b, relations);
  ra.atoms.merge(rb.atoms);
  rb.atoms = ra.atoms;
  MatchReport rep;
  for (const auto& r : ra.inequalities)
    if (!implies(rb, r, relations)) rep.missing_from_b.push_back(r);
  for (const auto& r : rb.inequalities)
    if (!implies(ra, r, relations)) rep.missing_from_a.push_back(r);
  return rep;
}

}  // namespace rrk::algebra
