#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "rrk/dm/atoms.hpp"
#include "rrk/dm/channel.hpp"
#include "rrk/dm/conditions.hpp"
#include "rrk/dm/frontier.hpp"
#include "rrk/dm/grid.hpp"
#include "rrk/dm/io.hpp"
#include "rrk/dm/pmf.hpp"
#include "rrk/dm/regions.hpp"

using namespace rrk::dm;
using rrk::geom::BoundSet;

namespace {

// Y1 = X1, Y2 = X1 xor X2.
DmChannel noiseless() {
  return DmChannel::tabulate(2, 2, 2, 2, [](int x1, int x2, int y1, int y2) {
    return (y1 == x1 && y2 == (x1 ^ x2)) ? 1.0 : 0.0;
  });
}

// Y1 = X1 xor X2, Y2 = Y1 xor Bern(eps).
DmChannel xor_channel(double eps) {
  return DmChannel::tabulate(2, 2, 2, 2, [eps](int x1, int x2, int y1, int y2) {
    if (y1 != (x1 ^ x2)) return 0.0;
    return y2 == y1 ? 1 - eps : eps;
  });
}

JointDistribution uniform(std::vector<Role> roles, std::vector<int> sizes) {
  std::size_t n = 1;
  for (int s : sizes) n *= static_cast<std::size_t>(s);
  return {std::move(roles), std::move(sizes), std::vector<double>(n, 1.0 / double(n))};
}

std::vector<double> values(const BoundSet& b) {
  std::vector<double> v;
  for (const auto& e : b.entries) v.push_back(e.value);
  return v;
}

}  // namespace

TEST_CASE("mutual information examples") {
  Pmf indep({"X", "Y"}, {2, 2}, {0.25, 0.25, 0.25, 0.25});
  CHECK(indep.mutual_information({"X"}, {"Y"}) == doctest::Approx(0).epsilon(1e-15));
  Pmf copy({"X", "Y"}, {2, 2}, {0.5, 0, 0, 0.5});
  CHECK(copy.mutual_information({"X"}, {"Y"}) == doctest::Approx(1.0));
  Pmf bsc({"X", "Y"}, {2, 2}, {0.375, 0.125, 0.125, 0.375});
  const double want = 1 - binary_entropy(0.25);
  CHECK(want == doctest::Approx(0.188722).epsilon(1e-6));
  CHECK(bsc.mutual_information({"X"}, {"Y"}) == doctest::Approx(want).epsilon(1e-12));
  CHECK(evaluate_info_atom(bsc, "I(X;Y)") == doctest::Approx(want).epsilon(1e-12));
  CHECK(evaluate_info_atom(bsc, "H(Y|X)") == doctest::Approx(binary_entropy(0.25)).epsilon(1e-12));
  CHECK_THROWS(bsc.mutual_information({"X"}, {"X"}));
  CHECK_THROWS_AS(bsc.mutual_information({"X"}, {"Z"}), std::out_of_range);
}

TEST_CASE("information measures on random joints") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    Pmf p = random_pmf({"A", "B", "C", "D"}, {2, 3, 2, 2}, rng);
    const double lhs = p.mutual_information({"A"}, {"B", "C"}, {"D"});
    const double rhs = p.mutual_information({"A"}, {"B"}, {"D"}) +
                       p.mutual_information({"A"}, {"C"}, {"B", "D"});
    CHECK(std::fabs(lhs - rhs) < 1e-10);
    const double i = p.mutual_information({"A", "C"}, {"B"});
    CHECK(i >= 0);
    CHECK(i <= std::log2(3.0) + 1e-12);
    CHECK(i <= std::log2(4.0) + 1e-12);
  }
}

TEST_CASE("channel validation") {
  DmChannel bad = noiseless();
  bad.p[0] = 0.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(noiseless().is_semideterministic());
  CHECK(xor_channel(0.1).is_semideterministic());
  auto noisy = DmChannel::tabulate(2, 2, 2, 2, [](int x1, int, int y1, int y2) {
    return (y1 == x1 ? 0.9 : 0.1) * (y2 == 0 ? 1.0 : 0.0);
  });
  CHECK_FALSE(noisy.is_semideterministic());
}

TEST_CASE("outer bound on the noiseless channel") {
  auto d = uniform({Role::X1, Role::X2}, {2, 2});
  auto thm1 = eval_dm_region(DmRegion::OuterThm1, noiseless(), d);
  REQUIRE(thm1.entries.size() == 3);
  for (double v : values(thm1)) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(thm1.entries[2].c1 == 1);
  CHECK(thm1.entries[2].c2 == 1);
  CHECK(thm1.entries[0].source.rfind("OUTER_THM1", 0) == 0);

  auto semi = eval_dm_region(DmRegion::SemidetCap, noiseless(), d);
  REQUIRE(semi.entries.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::fabs(semi.entries[i].value - thm1.entries[i].value) < 1e-12);
}

TEST_CASE("semi-deterministic capacity needs a deterministic Y1") {
  auto d = uniform({Role::X1, Role::X2}, {2, 2});
  auto noisy = DmChannel::tabulate(2, 2, 2, 2, [](int x1, int, int y1, int y2) {
    return (y1 == x1 ? 0.9 : 0.1) * 0.5 + 0 * y2;
  });
  CHECK_THROWS_AS(eval_dm_region(DmRegion::SemidetCap, noisy, d), std::invalid_argument);
}

TEST_CASE("superposition inner bound with a constant X1") {
  // X1 = 0, X2 uniform.
  JointDistribution d{{Role::X1, Role::X2}, {2, 2}, {0.5, 0.5, 0, 0}};
  auto b = eval_dm_region(DmRegion::InnerSuperpos, noiseless(), d);
  REQUIRE(b.entries.size() == 4);
  for (const auto& e : b.entries)
    if (e.c2 == 0) CHECK(std::fabs(e.value) < 1e-12);
}

TEST_CASE("missing and surplus roles") {
  auto d = uniform({Role::X1, Role::X2}, {2, 2});
  CHECK_THROWS_AS(eval_dm_region(DmRegion::Outer1Rv, noiseless(), d), std::invalid_argument);
  auto extra = uniform({Role::U, Role::X1, Role::X2}, {2, 2, 2});
  CHECK_THROWS_AS(eval_dm_region(DmRegion::OuterThm1, noiseless(), extra), std::invalid_argument);
}

TEST_CASE("factorization violations report the deviation") {
  // OUTER_3RV needs independent U1, U2; make them equal.
  auto d = uniform({Role::U1, Role::U2, Role::V, Role::X1, Role::X2}, {2, 2, 2, 2, 2});
  for (std::size_t i = 0; i < d.p.size(); ++i) {
    const int u1 = int(i >> 4) & 1, u2 = int(i >> 3) & 1;
    d.p[i] = u1 == u2 ? 1.0 / 16 : 0.0;
  }
  d.validate();
  try {
    eval_dm_region(DmRegion::Outer3Rv, noiseless(), d);
    FAIL("expected FactorizationError");
  } catch (const FactorizationError& e) {
    CHECK(e.deviation() > 0.1);
  }
}

TEST_CASE("one-RV outer bound sits inside the basic outer bound") {
  std::mt19937_64 rng(23);
  auto ch = xor_channel(0.2);
  rrk::geom::R1Grid g;
  g.upper = 1;
  g.samples = 51;
  for (int t = 0; t < 30; ++t) {
    Pmf p = random_pmf({"U", "X1", "X2"}, {2, 2, 2}, rng);
    JointDistribution d{{Role::U, Role::X1, Role::X2}, {2, 2, 2}, p.probs()};
    JointDistribution xd{{Role::X1, Role::X2}, {2, 2}, p.marginal({"X1", "X2"}).probs()};
    auto one = eval_dm_region(DmRegion::Outer1Rv, ch, d);
    auto thm1 = eval_dm_region(DmRegion::OuterThm1, ch, xd);
    for (int k = 0; k <= 50; ++k) {
      const double r1 = k / 50.0;
      const double a = rrk::geom::member_r2_at(one, r1);
      const double b = rrk::geom::member_r2_at(thm1, r1);
      CHECK(a <= b + 1e-12);
    }
  }
}

TEST_CASE("bound values do not depend on symbol labels") {
  std::mt19937_64 rng(31);
  auto ch = DmChannel::tabulate(2, 3, 2, 2, [](int x1, int x2, int y1, int y2) {
    const double q = 0.1 + 0.2 * x2;
    const double p1 = (y1 == (x1 ^ (x2 & 1))) ? 1 - q : q;
    const double p2 = (y2 == x1) ? 0.7 : 0.3;
    return p1 * p2;
  });
  // Swap X2 symbols 0 and 2 and Y2 symbols 0 and 1.
  auto perm = DmChannel::tabulate(2, 3, 2, 2, [&](int x1, int x2, int y1, int y2) {
    const int sx2 = x2 == 0 ? 2 : x2 == 2 ? 0 : 1;
    return ch.at(x1, sx2, y1, 1 - y2);
  });
  for (int t = 0; t < 10; ++t) {
    Pmf p = random_pmf({"U", "X1", "X2"}, {2, 2, 3}, rng);
    JointDistribution d{{Role::U, Role::X1, Role::X2}, {2, 2, 3}, p.probs()};
    JointDistribution q = d;
    for (int u = 0; u < 2; ++u)
      for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 3; ++x2) {
          const int sx2 = x2 == 0 ? 2 : x2 == 2 ? 0 : 1;
          q.p[(u * 2 + x1) * 3 + x2] = d.p[(u * 2 + x1) * 3 + sx2];
        }
    for (DmRegion r : {DmRegion::Outer1Rv, DmRegion::OuterBcDms}) {
      auto a = values(eval_dm_region(r, ch, d));
      auto b = values(eval_dm_region(r, perm, q));
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::fabs(a[i] - b[i]) < 1e-12);
    }
  }
}

TEST_CASE("regime conditions") {
  CHECK(check_conditions_dm(ConditionKind::Semidet, xor_channel(0.1), std::nullopt).holds);

  auto same = DmChannel::tabulate(2, 2, 2, 2, [](int x1, int x2, int y1, int y2) {
    return (y1 == (x1 ^ x2) && y2 == y1) ? 1.0 : 0.0;
  });
  auto d = uniform({Role::X1, Role::X2}, {2, 2});
  auto vsi = check_conditions_dm(ConditionKind::Vsi, same, d);
  CHECK(std::fabs(vsi.slack) < 1e-12);
  CHECK(vsi.holds);
  CHECK_THROWS_AS(check_conditions_dm(ConditionKind::Vsi, same, std::nullopt), std::invalid_argument);

  // X1 = U, U and X2 independent uniform, Y1 = X1: U is known from Y1.
  JointDistribution pd{{Role::U, Role::X1, Role::X2}, {2, 2, 2}, {0.25, 0.25, 0, 0, 0, 0, 0.25, 0.25}};
  auto pdcb = check_conditions_dm(ConditionKind::PdcB, noiseless(), pd);
  CHECK(std::fabs(pdcb.slack) < 1e-12);
  CHECK(pdcb.holds);
  CHECK(pdcb.note.find("untested") != std::string::npos);
}

TEST_CASE("distribution grids") {
  CHECK(lattice_denominator(0.05) == 20);
  CHECK_THROWS(lattice_denominator(0.3));
  CHECK_THROWS(lattice_denominator(0));
  CHECK(simplex_lattice_size(20, 4) == 1771);

  DistributionGrid g;
  g.step = 0.5;
  g.budget = 5'000'000;
  const auto& info = region_info(DmRegion::Outer3Rv);
  auto grid = make_grid(info.roles, info.factorization, noiseless(), g);
  CHECK(grid.size() > 0);
  for (std::size_t i = 0; i < grid.size(); i += 9973) {
    auto m = grid.member(i);
    m.validate();
    CHECK(factorization_deviation(m, info.factorization) < kFactorizationTol);
  }

  g.step = 0.25;
  try {
    make_grid(info.roles, info.factorization, noiseless(), g);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.required() > double(g.budget));
  }
}

TEST_CASE("brute-force frontiers") {
  DistributionGrid g;
  g.step = 0.05;
  auto f = dm_frontier(DmRegion::OuterThm1, noiseless(), g);
  CHECK(f.r1_max() == doctest::Approx(1).epsilon(1e-3));
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::fabs(f.r2[i] - (1 - f.r1[i])) < 1e-3);

  auto one = dm_frontier(DmRegion::OuterThm1, noiseless(), std::vector<JointDistribution>{uniform({Role::X1, Role::X2}, {2, 2})});
  CHECK(one.r2_max() == doctest::Approx(1));
  CHECK(one.r1_max() == doctest::Approx(1));
}

TEST_CASE("random atom values") {
  std::mt19937_64 rng(2);
  std::vector<std::string> atoms = {"I(Y1;U1c,U2c)", "I(Y1;U2c)", "I(Y1;U1c|U2c)"};
  CHECK(atom_variables(atoms) == std::set<std::string>{"U1c", "U2c", "Y1"});
  for (int t = 0; t < 20; ++t) {
    auto v = random_atom_values(atoms, rng, 3);
    CHECK(std::fabs(v[atoms[0]] - v[atoms[1]] - v[atoms[2]]) < 1e-10);
  }
}

TEST_CASE("json round trips") {
  auto ch = xor_channel(0.1);
  auto back = channel_from_json(channel_to_json(ch));
  CHECK(back.nx1 == 2);
  CHECK(back.p == ch.p);
  auto d = uniform({Role::U, Role::X1, Role::X2}, {3, 2, 2});
  auto dd = distribution_from_json(distribution_to_json(d));
  CHECK(dd.roles == d.roles);
  CHECK(dd.sizes == d.sizes);
  CHECK(dd.p == d.p);
  CHECK_THROWS(channel_from_json("{\"X1\": 2}"));
  CHECK_THROWS(distribution_from_json("{\"roles\": [{\"name\": \"Q\", \"size\": 2}], \"p\": [0.5, 0.5]}"));
}
