#include <algorithm>
#include <random>

#include "doctest.h"
#include "rrk/algebra/atom.hpp"
#include "rrk/algebra/fme.hpp"
#include "rrk/algebra/oracle.hpp"
#include "rrk/algebra/parse.hpp"
#include "rrk/algebra/pipeline.hpp"
#include "rrk/algebra/redundancy.hpp"
#include "rrk/algebra/simplex.hpp"
#include "rrk/dm/atoms.hpp"

using namespace rrk::algebra;

namespace {

std::string data(const std::string& name) { return read_text_file(std::string(RRK_DATA_DIR) + "/" + name); }

ParseOptions toy_vars() {
  ParseOptions o;
  o.variables = {"x", "y", "t", "s"};
  return o;
}

std::vector<AtomRelation> chain() { return parse_relations(data("chain.rel")); }

std::map<std::string, Rational> all_atoms(const InequalitySystem& sys, const Rational& v) {
  std::map<std::string, Rational> out;
  for (const auto& a : sys.atoms.list()) out[a.name] = v;
  return out;
}

}  // namespace

TEST_CASE("parse a single inequality") {
  auto sys = parse_system("R1 <= I(Y1;X1|X2)");
  CHECK(sys.inequalities.size() == 1);
  CHECK(sys.atoms.size() == 1);
  CHECK(sys.atoms.contains("I(Y1;X1|X2)"));
}

TEST_CASE("parse the superposition/binning scheme") {
  auto sys = parse_system(data("binning_scheme.ineq"));
  CHECK(sys.variables() == std::set<std::string>{"R2c", "R1c", "Rp1c", "R2p", "R2pb"});
  std::size_t upper = 0;
  for (const auto& r : sys.inequalities)
    if (!r.rhs.terms.empty()) ++upper;
  CHECK(upper == 8);  // the seven bounds plus the binning-rate lower bound
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_system("R1 <= I(Y1 X1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 7);
  }
  CHECK_THROWS_AS(parse_system("Q7 <= I(Y1;X1)"), ParseError);
  CHECK_THROWS_AS(parse_system("atom A\natom A signed\nR1 <= A"), std::exception);
  CHECK_THROWS_AS(parse_system("R1 <"), ParseError);
}

TEST_CASE("canonical atom names") {
  CHECK(canonical_atom_name("I(Y2; X2, U1c | U2c)") == "I(Y2;U1c,X2|U2c)");
  CHECK(canonical_atom_name("H(Y1|X2,X1)") == "H(Y1|X1,X2)");
  CHECK(canonical_atom_name(" A ") == "A");
  CHECK_THROWS(parse_info_atom("I(Y1;"));
}

TEST_CASE("toy elimination pairs one positive with one negative row") {
  auto o = toy_vars();
  auto sys = parse_system("t <= A\nx + t <= B\nt >= 0\nx >= 0", o);
  auto out = fme_eliminate(sys, "t");
  auto want = parse_system("x <= B\nx >= 0\n0 <= A", o);
  CHECK(print_system(out) == print_system(canonicalize(want)));
  CHECK_FALSE(out.mentions("t"));
}

TEST_CASE("eliminating an absent variable is a no-op") {
  auto o = toy_vars();
  auto sys = canonicalize(parse_system("x <= A\nx >= 0", o));
  CHECK(print_system(fme_eliminate(sys, "y")) == print_system(sys));
}

TEST_CASE("substitute preconditions") {
  InequalitySystem empty;
  CHECK(substitute(empty, parse_definition("R2=R2c+R2p+R2pb")).empty());
  auto sys = parse_system(data("ratesharing_step4.ineq"));
  CHECK_THROWS_AS(substitute(sys, parse_definition("R2c=R2p+R2pb")), std::invalid_argument);
  CHECK_THROWS_AS(substitute(sys, parse_definition("R2=R2c+R1")), std::invalid_argument);
  auto sub = substitute(sys, parse_definition("R2=R2c+R2p+R2pb"));
  CHECK(sub.mentions("R2"));
  CHECK(sub.equalities.size() == 1);
}

TEST_CASE("reduce_redundant drops duplicates and dominated rows") {
  auto o = toy_vars();
  auto dup = parse_system("x <= A\nx <= A", o);
  CHECK(reduce_redundant(dup, {}).inequalities.size() == 1);

  auto dom = parse_system("x <= A\nx <= A + B", o);
  auto r = reduce_redundant_certified(dom, {});
  REQUIRE(r.system.inequalities.size() == 1);
  CHECK(format_inequality(r.system.inequalities[0]) == "x <= A");
  REQUIRE(r.removed.size() == 1);
  CHECK(certificate_lhs_exact(r.system, r.removed[0].inequality, r.removed[0].certificate));

  // A signed atom gives no such guarantee.
  auto sgn = parse_system("atom B signed\nx <= A\nx <= A + B", o);
  CHECK(reduce_redundant(sgn, {}).inequalities.size() == 2);
}

TEST_CASE("certified pruning of the rate-sharing step") {
  auto rel = chain();
  auto start = set_zero(parse_system(data("ratesharing.ineq")), "D2c1");
  ProjectionPlan plan;
  plan.eliminate = {"D2p1"};
  plan.relations = rel;
  auto res = run_projection(start, plan);
  auto want = parse_system(data("ratesharing_step1.ineq"));
  CHECK(systems_match(res.system, want, rel).match());
  for (const auto& step : res.steps)
    for (const auto& rm : step.removed)
      CHECK(certificate_lhs_exact(step.system, rm.inequality, rm.certificate));
  auto chk = rrk::dm::verify_certificates(res, 100, 7);
  CHECK(chk.ok());
}

TEST_CASE("systems_match") {
  auto rel = chain();
  auto inner = parse_system(data("innerbound.ineq"));
  CHECK(systems_match(inner, inner, rel).match());

  auto defect = inner;
  auto it = std::find_if(defect.inequalities.begin(), defect.inequalities.end(),
                         [](const RateInequality& r) { return r.lhs.size() == 2 && r.lhs.at("R1") == 2; });
  REQUIRE(it != defect.inequalities.end());
  const RateInequality dropped = *it;
  defect.inequalities.erase(it);
  auto rep = systems_match(inner, defect, rel);
  CHECK_FALSE(rep.match());
  REQUIRE(rep.missing_from_b.size() == 1);
  CHECK(rep.missing_from_b[0] == normalize(dropped));
  CHECK(rep.missing_from_a.empty());
}

TEST_CASE("inner bound from the superposition/binning scheme") {
  auto rel = chain();
  ProjectionPlan plan;
  auto doc = parse_document(data("binning_scheme.ineq"));  // carries "let R1 = R1c"
  plan.eliminate = {"Rp1c"};
  plan.definitions = doc.definitions;
  plan.definitions.push_back(parse_definition("R2=R2c+R2p+R2pb"));
  plan.relations = rel;
  auto res = run_projection(doc.system, plan);
  auto rep = systems_match(res.system, parse_system(data("innerbound.ineq")), rel);
  CHECK(rep.match());
  CHECK(res.system.variables() == std::set<std::string>{"R1", "R2"});
}

TEST_CASE("elimination order does not matter") {
  auto rel = chain();
  auto start = set_zero(parse_system(data("ratesharing.ineq")), "D2c1");
  std::vector<std::string> vars = {"D2p1", "D2p2", "D2pb1", "D2pb2"};
  InequalitySystem first;
  std::sort(vars.begin(), vars.end());
  int perms = 0;
  do {
    ProjectionPlan plan;
    plan.eliminate = vars;
    plan.relations = rel;
    auto out = run_projection(start, plan).system;
    if (perms == 0) {
      first = out;
    } else {
      CHECK(systems_match(first, out, rel).match());
    }
    ++perms;
  } while (std::next_permutation(vars.begin(), vars.end()) && perms < 8);
}

TEST_CASE("print then parse is the identity on canonical text") {
  for (const char* f : {"binning_scheme.ineq", "ratesharing.ineq", "innerbound.ineq", "ratesharing_step4.ineq"}) {
    auto doc = parse_document(data(f));
    doc.system = canonicalize(doc.system);
    const std::string once = print_document(doc);
    auto again = parse_document(once);
    again.system = canonicalize(again.system);
    CHECK(print_document(again) == once);
  }
  auto rels = parse_document(data("chain.rel"));
  CHECK(print_document(parse_document(print_document(rels))) == print_document(rels));
}

TEST_CASE("phase-one simplex") {
  RationalMatrix A = {{1, 1, 1}, {1, -1, 0}};
  auto x = find_nonnegative_solution(A, {4, 1});
  REQUIRE(x);
  CHECK((*x)[0] + (*x)[1] + (*x)[2] == 4);
  CHECK((*x)[0] - (*x)[1] == 1);
  for (const auto& v : *x) CHECK(v >= 0);
  CHECK_FALSE(find_nonnegative_solution({{1, 1}}, {-1}));
}

TEST_CASE("numeric oracle on a toy system") {
  auto o = toy_vars();
  auto sys = parse_system("t <= A\nx + t <= B\ny - t <= C\nt >= 0\nx >= 0\ny >= 0", o);
  auto proj = fme_eliminate(sys, "t");
  std::map<std::string, Rational> v = {{"A", 2}, {"B", 3}, {"C", Rational(1, 2)}};
  auto rep = numeric_projection_oracle(sys, proj, v, 1000, 1);
  CHECK(rep.samples == 1000);
  CHECK(rep.sound());
  CHECK(rep.inside > 0);
  CHECK(rep.inside < 1000);
}

TEST_CASE("numeric oracle: scheme against the inner bound with unit atoms") {
  auto doc = parse_document(data("binning_scheme.ineq"));
  auto sys = fme_eliminate(doc.system, "Rp1c");
  for (const auto& d : doc.definitions) sys = substitute(sys, d);
  sys = substitute(sys, parse_definition("R2=R2c+R2p+R2pb"));
  auto inner = parse_system(data("innerbound.ineq"));
  auto rep = numeric_projection_oracle(sys, inner, all_atoms(sys, 1), 1000, 3, {"R1", "R2"});
  CHECK(rep.sound());
  CHECK(rep.inside > 0);
}

TEST_CASE("numeric oracle catches a corrupted projection") {
  auto o = toy_vars();
  auto sys = parse_system("t <= A\nx + t <= B\nt >= 0\nx >= 0", o);
  auto proj = fme_eliminate(sys, "t");
  // Flip the sign of x in "x <= B".
  for (auto& r : proj.inequalities)
    if (!r.rhs.terms.empty() && r.lhs.count("x")) r.lhs["x"] = -r.lhs["x"];
  auto rep = numeric_projection_oracle(sys, proj, {{"A", 1}, {"B", 1}}, 1000, 5);
  CHECK_FALSE(rep.sound());
  REQUIRE(rep.counterexample);
  CHECK(rep.counterexample->count("x"));
}

TEST_CASE("reduction keeps the solution set") {
  auto rel = chain();
  auto start = set_zero(parse_system(data("ratesharing.ineq")), "D2c1");
  auto raw = fme_eliminate(start, "D2p1");
  auto red = reduce_redundant(raw, rel);
  CHECK(red.inequalities.size() <= raw.inequalities.size());
  std::mt19937_64 rng(11);
  std::vector<std::string> names;
  for (const auto& a : raw.atoms.list()) names.push_back(a.name);
  for (const auto& r : rel) {
    for (const auto& [n, c] : r.dominant.terms) names.push_back(n);
    for (const auto& [n, c] : r.dominated.terms) names.push_back(n);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  auto vars = raw.variables();
  std::uniform_int_distribution<int> pick(-2, 40);
  for (int trial = 0; trial < 5; ++trial) {
    auto dv = rrk::dm::random_atom_values(names, rng);
    std::map<std::string, Rational> av;
    for (const auto& [n, x] : dv) av[n] = Rational(x);  // exact binary value
    for (int s = 0; s < 200; ++s) {
      Point p;
      for (const auto& v : vars) p[v] = Rational(pick(rng), 64);
      CHECK(satisfies(raw, p, av) == satisfies(red, p, av));
    }
  }
}
