#include "rrk/algebra/system.hpp"

#include <algorithm>
#include <numeric>

namespace rrk::algebra {

void add_scaled(LinearForm& dst, const LinearForm& src, const Rational& k) {
  if (k == 0) return;
  for (const auto& [name, c] : src) {
    auto it = dst.find(name);
    if (it == dst.end()) {
      dst.emplace(name, k * c);
    } else {
      it->second += k * c;
      if (it->second == 0) dst.erase(it);
    }
  }
}

bool is_zero(const LinearForm& f) { return f.empty(); }

void AtomRegistry::declare(const std::string& name, bool nonneg) {
  auto [it, inserted] = atoms_.emplace(name, nonneg);
  if (!inserted && it->second != nonneg)
    throw std::invalid_argument("atom '" + name + "' declared with conflicting flags");
}

void AtomRegistry::merge(const AtomRegistry& other) {
  for (const auto& [n, f] : other.atoms_) declare(n, f);
}

bool AtomRegistry::nonneg(const std::string& name) const {
  auto it = atoms_.find(name);
  if (it == atoms_.end()) throw std::out_of_range("unknown atom '" + name + "'");
  return it->second;
}

std::vector<Atom> AtomRegistry::list() const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (const auto& [n, f] : atoms_) out.push_back({n, f});
  return out;
}

AffineBound& AffineBound::operator+=(const AffineBound& o) {
  add_scaled(terms, o.terms, 1);
  constant += o.constant;
  return *this;
}

AffineBound& AffineBound::operator-=(const AffineBound& o) {
  add_scaled(terms, o.terms, -1);
  constant -= o.constant;
  return *this;
}

AffineBound& AffineBound::operator*=(const Rational& k) {
  if (k == 0) {
    terms.clear();
    constant = 0;
    return *this;
  }
  for (auto& [n, c] : terms) c *= k;
  constant *= k;
  return *this;
}

double AffineBound::evaluate(const std::map<std::string, double>& values) const {
  double v = constant.get_d();
  for (const auto& [n, c] : terms) {
    auto it = values.find(n);
    if (it == values.end()) throw std::out_of_range("no value for atom '" + n + "'");
    v += c.get_d() * it->second;
  }
  return v;
}

Rational AffineBound::evaluate(const std::map<std::string, Rational>& values) const {
  Rational v = constant;
  for (const auto& [n, c] : terms) {
    auto it = values.find(n);
    if (it == values.end()) throw std::out_of_range("no value for atom '" + n + "'");
    v += c * it->second;
  }
  return v;
}

AffineBound operator+(AffineBound a, const AffineBound& b) { return a += b; }
AffineBound operator-(AffineBound a, const AffineBound& b) { return a -= b; }
AffineBound operator*(const Rational& k, AffineBound a) { return a *= k; }

namespace {

template <class Map>
bool less_form(const Map& a, const Map& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return cmp(x.second, y.second) < 0;
      });
}

// Positive factor that turns the given coefficients into coprime integers.
Rational integer_scale(const std::vector<const Rational*>& coeffs) {
  mpz_class l = 1, g = 0;
  for (const auto* c : coeffs) {
    mpz_class den = c->get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  for (const auto* c : coeffs) {
    Rational scaled = *c * l;
    mpz_class num = scaled.get_num();
    mpz_class a = abs(num);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (g == 0) return 1;
  Rational s(l, g);
  s.canonicalize();
  return s;
}

}  // namespace

bool RateInequality::operator<(const RateInequality& o) const {
  if (lhs.size() != o.lhs.size()) return lhs.size() < o.lhs.size();
  if (lhs != o.lhs) return less_form(lhs, o.lhs);
  if (rhs.terms != o.rhs.terms) return less_form(rhs.terms, o.rhs.terms);
  return rhs.constant < o.rhs.constant;
}

RateInequality normalize(RateInequality ineq) {
  std::vector<const Rational*> cs;
  if (!ineq.lhs.empty()) {
    for (const auto& [n, c] : ineq.lhs) cs.push_back(&c);
  } else {
    for (const auto& [n, c] : ineq.rhs.terms) cs.push_back(&c);
    if (ineq.rhs.constant != 0) cs.push_back(&ineq.rhs.constant);
  }
  Rational s = integer_scale(cs);
  if (s != 1) {
    for (auto& [n, c] : ineq.lhs) c *= s;
    ineq.rhs *= s;
  }
  return ineq;
}

LinearEquality normalize(LinearEquality eq) {
  std::vector<const Rational*> cs;
  for (const auto& [n, c] : eq.lhs) cs.push_back(&c);
  Rational s = integer_scale(cs);
  // Fix the sign so that the first coefficient is positive.
  if (!eq.lhs.empty() && eq.lhs.begin()->second < 0) s = -s;
  if (s != 1) {
    for (auto& [n, c] : eq.lhs) c *= s;
    eq.rhs *= s;
  }
  return eq;
}

InequalitySystem canonicalize(InequalitySystem sys) {
  std::vector<RateInequality> rows;
  rows.reserve(sys.inequalities.size());
  for (auto& r : sys.inequalities) {
    auto n = normalize(std::move(r));
    if (n.lhs.empty() && n.rhs.terms.empty() && n.rhs.constant >= 0) continue;
    rows.push_back(std::move(n));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  sys.inequalities = std::move(rows);

  std::vector<LinearEquality> eqs;
  for (auto& e : sys.equalities) {
    if (e.lhs.empty() && e.rhs.terms.empty() && e.rhs.constant == 0) continue;
    auto n = normalize(std::move(e));
    if (std::find(eqs.begin(), eqs.end(), n) == eqs.end()) eqs.push_back(std::move(n));
  }
  sys.equalities = std::move(eqs);
  return sys;
}

void register_atoms(InequalitySystem& sys) {
  auto reg = [&](const AffineBound& b) {
    for (const auto& [n, c] : b.terms)
      if (!sys.atoms.contains(n)) sys.atoms.declare(n, true);
  };
  for (const auto& r : sys.inequalities) reg(r.rhs);
  for (const auto& e : sys.equalities) reg(e.rhs);
}

std::set<std::string> InequalitySystem::variables() const {
  std::set<std::string> out;
  for (const auto& r : inequalities)
    for (const auto& [v, c] : r.lhs) out.insert(v);
  for (const auto& e : equalities)
    for (const auto& [v, c] : e.lhs) out.insert(v);
  return out;
}

bool InequalitySystem::mentions(const std::string& var) const {
  for (const auto& r : inequalities)
    if (r.lhs.count(var)) return true;
  for (const auto& e : equalities)
    if (e.lhs.count(var)) return true;
  return false;
}

bool holds(const RateInequality& ineq, const std::map<std::string, Rational>& point,
           const std::map<std::string, Rational>& atom_values) {
  Rational lhs = 0;
  for (const auto& [v, c] : ineq.lhs) {
    auto it = point.find(v);
    if (it == point.end()) throw std::out_of_range("no value for variable '" + v + "'");
    lhs += c * it->second;
  }
  return lhs <= ineq.rhs.evaluate(atom_values);
}

InequalitySystem set_zero(const InequalitySystem& sys, const std::string& var) {
  InequalitySystem out = sys;
  for (auto& r : out.inequalities) r.lhs.erase(var);
  for (auto& e : out.equalities) e.lhs.erase(var);
  return canonicalize(std::move(out));
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace rrk::algebra
