#include "rrk/dm/atoms.hpp"

#include <limits>

#include "rrk/algebra/atom.hpp"

namespace rrk::dm {

std::set<std::string> atom_variables(const std::vector<std::string>& atoms) {
  std::set<std::string> vars;
  for (const auto& a : atoms) {
    auto ia = algebra::parse_info_atom(a);
    for (const auto& g : ia.groups) vars.insert(g.begin(), g.end());
    vars.insert(ia.given.begin(), ia.given.end());
  }
  return vars;
}

std::map<std::string, double> evaluate_atoms(const Pmf& pmf, const std::vector<std::string>& atoms) {
  std::map<std::string, double> out;
  for (const auto& a : atoms) out[a] = evaluate_info_atom(pmf, a);
  return out;
}

std::map<std::string, double> random_atom_values(const std::vector<std::string>& atoms,
                                                 std::mt19937_64& rng, int alphabet) {
  auto vars = atom_variables(atoms);
  std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<int> sizes(names.size(), alphabet);
  return evaluate_atoms(random_pmf(names, sizes, rng), atoms);
}

CertificateCheck verify_certificates(const algebra::ProjectionResult& res, std::size_t samples,
                                     std::uint64_t seed, double tol) {
  std::set<std::string> names;
  for (const auto& step : res.steps) {
    for (const auto& a : step.system.atoms.list()) names.insert(a.name);
    for (const auto& r : step.removed)
      for (const auto& [n, c] : r.inequality.rhs.terms) names.insert(n);
  }
  const std::vector<std::string> atoms(names.begin(), names.end());
  std::mt19937_64 rng(seed);
  std::vector<std::map<std::string, double>> values;
  for (std::size_t i = 0; i < samples; ++i) values.push_back(random_atom_values(atoms, rng));

  CertificateCheck chk;
  chk.assignments = samples;
  chk.worst_slack = std::numeric_limits<double>::infinity();
  for (const auto& step : res.steps)
    for (const auto& r : step.removed) {
      ++chk.certificates;
      if (!algebra::certificate_lhs_exact(step.system, r.inequality, r.certificate)) {
        chk.violations += samples;
        chk.worst_slack = -std::numeric_limits<double>::infinity();
        continue;
      }
      for (const auto& v : values) {
        double s = algebra::certificate_slack(step.system, r.inequality, r.certificate, v);
        chk.worst_slack = std::min(chk.worst_slack, s);
        if (s < -tol) ++chk.violations;
      }
    }
  if (chk.certificates == 0) chk.worst_slack = 0;
  return chk;
}

}  // namespace rrk::dm
