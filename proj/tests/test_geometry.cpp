#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "doctest.h"
#include "rrk/gaussian/bounds.hpp"
#include "rrk/gaussian/family.hpp"
#include "rrk/geometry/frontier.hpp"
#include "rrk/geometry/kernels.hpp"
#include "rrk/geometry/parallel.hpp"
#include "rrk/geometry/plot.hpp"

using namespace rrk::geom;

namespace {

BoundSet box(double r1, double r2, double sum) {
  return {{{1, 0, r1, "r1"}, {0, 1, r2, "r2"}, {1, 1, sum, "sum"}}};
}

std::vector<BoundSet> random_members(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0, 5);
  std::uniform_int_distribution<int> coef(0, 2);
  std::vector<BoundSet> out;
  for (std::size_t i = 0; i < n; ++i) {
    BoundSet b = box(u(rng), u(rng), u(rng));
    int k = coef(rng);
    if (k) b.entries.push_back({double(k), 1, u(rng) * 2, "mix"});
    out.push_back(b);
  }
  return out;
}

Frontier shifted(const Frontier& f, double d) {
  // Every point moved by +d in both coordinates, plus the axis points.
  Frontier g;
  g.r1.push_back(0);
  g.r2.push_back(f.r2.front() + d);
  for (std::size_t i = 0; i < f.size(); ++i) {
    g.r1.push_back(f.r1[i] + d);
    g.r2.push_back(f.r2[i] + d);
  }
  g.r1.push_back(f.r1.back() + d + 1e-9);
  g.r2.push_back(0);
  return g;
}

}  // namespace

TEST_CASE("member polygon queries") {
  BoundSet b = box(1, 3, 2);
  CHECK(member_r1_max(b) == doctest::Approx(1));
  CHECK(member_r2_at(b, 0) == doctest::Approx(2));
  CHECK(member_r2_at(b, 0.5) == doctest::Approx(1.5));
  CHECK(member_r2_at(b, 1.5) < 0);
  CHECK(member_contains(b, 0.5, 1.5));
  CHECK_FALSE(member_contains(b, 0.5, 1.6));
  CHECK_THROWS_AS(member_r2_at(BoundSet{{{1, 0, 1, "r1"}}}, 0), std::domain_error);
  CHECK_THROWS_AS(check_coefficients(BoundSet{{{-1, 0, 1, ""}}}), std::invalid_argument);
  CHECK_THROWS_AS(check_coefficients(BoundSet{{{0, 0, 1, ""}}}), std::invalid_argument);
}

TEST_CASE("single member frontier is that polygon's boundary") {
  R1Grid g;
  g.samples = 11;
  auto f = frontier_from_bound_sets({box(1, 3, 2)}, g);
  check_frontier(f);
  CHECK(f.r1.back() == doctest::Approx(1));
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(f.r2[i] == doctest::Approx(2 - f.r1[i]));
  CHECK_THROWS_AS(frontier_from_bound_sets({}, g), std::invalid_argument);
}

TEST_CASE("SIMD kernels agree with the scalar reference bit for bit") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    auto members = random_members(rng, 1 + trial * 37);
    MemberTable t = build_member_table(members);
    std::vector<double> xs(203);
    for (std::size_t j = 0; j < xs.size(); ++j) xs[j] = 5.0 * double(j) / 200.0;
    std::vector<double> ref(xs.size()), got(xs.size());
    upper_envelope(t, xs.data(), xs.size(), ref.data(), KernelImpl::Scalar);
    for (KernelImpl k : {KernelImpl::Avx2, KernelImpl::Neon}) {
      if (!kernel_available(k)) continue;
      upper_envelope(t, xs.data(), xs.size(), got.data(), k);
      CHECK(std::memcmp(ref.data(), got.data(), ref.size() * sizeof(double)) == 0);
    }
  }
  CHECK(kernel_available(KernelImpl::Scalar));
  CHECK(std::string(kernel_name(active_kernel())).size() > 0);
}

TEST_CASE("frontier is monotone and invariant to member order") {
  std::mt19937_64 rng(5);
  auto members = random_members(rng, 300);
  R1Grid g;
  auto f = frontier_from_bound_sets(members, g);
  check_frontier(f);
  std::shuffle(members.begin(), members.end(), rng);
  auto h = frontier_from_bound_sets(members, g);
  CHECK(f.r1 == h.r1);
  CHECK(f.r2 == h.r2);
  auto gen = frontier_from_generator(members.size(), [&](std::size_t i) { return members[i]; }, g, "", 7);
  CHECK(gen.r1 == f.r1);
  CHECK(gen.r2 == f.r2);
}

TEST_CASE("refining a family never lowers the frontier") {
  std::mt19937_64 rng(9);
  auto members = random_members(rng, 200);
  R1Grid g;
  g.upper = 5;
  std::vector<BoundSet> half(members.begin(), members.begin() + 100);
  auto coarse = frontier_from_bound_sets(half, g);
  auto fine = frontier_from_bound_sets(members, g);
  CHECK(region_contains(fine, coarse, 0).contained);
}

TEST_CASE("concave envelope") {
  Frontier dip{{0, 0.5, 1}, {1, 0.2, 0}, "dip"};
  auto e = concave_envelope(dip);
  CHECK(e.r2[1] == doctest::Approx(0.5));
  auto e2 = concave_envelope(e);
  CHECK(e2.r2 == e.r2);

  Frontier concave{{0, 0.5, 1}, {1, 0.9, 0}, "c"};
  CHECK(concave_envelope(concave).r2 == concave.r2);

  std::mt19937_64 rng(3);
  auto f = frontier_from_bound_sets(random_members(rng, 50), R1Grid{});
  auto env = concave_envelope(f);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(env.r2[i] >= f.r2[i]);
  CHECK(concave_envelope(env).r2 == env.r2);
}

TEST_CASE("time-division segment") {
  rrk::gauss::ChannelGaussian ch{{0.1, 0}, 4, 1, 1};
  auto c = rrk::gauss::timediv_corners(ch);
  CHECK(c.r1 == doctest::Approx(1.0));
  CHECK(c.r2 == doctest::Approx(4.70044).epsilon(1e-6));
  auto f = rrk::gauss::gaussian_frontier(rrk::gauss::GRegion::InTimeDiv, ch);
  auto env = concave_envelope(f);
  for (std::size_t i = 0; i < env.size(); ++i)
    CHECK(env.r2[i] == doctest::Approx(c.r2 * (1 - env.r1[i] / c.r1)).epsilon(1e-9));
}

TEST_CASE("containment") {
  std::mt19937_64 rng(8);
  auto f = frontier_from_bound_sets(random_members(rng, 30), R1Grid{});
  auto self = region_contains(f, f, 0);
  CHECK(self.contained);
  CHECK(self.max_violation == 0);

  R1Grid g;
  g.upper = 2;
  auto big = frontier_from_bound_sets({box(2, 3, 4)}, g);
  auto small = frontier_from_bound_sets({box(1, 1, 1.5)}, g);
  CHECK(region_contains(big, small, 1e-12).contained);
  auto swapped = region_contains(small, big, 1e-12);
  CHECK_FALSE(swapped.contained);
  CHECK(swapped.max_violation > 0);
}

TEST_CASE("gaps") {
  std::mt19937_64 rng(21);
  auto f = frontier_from_bound_sets(random_members(rng, 40), R1Grid{});
  auto same = gap_between(f, f);
  CHECK(same.additive == 0);
  CHECK(same.multiplicative == 1);

  Frontier inner{{0, 1, 2}, {2, 1, 0}, "inner"};
  auto outer = shifted(inner, 1);
  auto rep = gap_between(outer, inner);
  CHECK(rep.additive == doctest::Approx(1).epsilon(1e-6));
  CHECK(rep.multiplicative >= 1);

  Frontier half{{0, 0.5, 1}, {1, 0.5, 0}, "half"};
  auto m = gap_between(inner, half);
  CHECK(m.multiplicative == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("frontier CSV and SVG") {
  Frontier f{{0, 0.5}, {1, 0.25}, "x"};
  std::ostringstream os;
  write_frontier_csv(os, f);
  CHECK(os.str() == "R1_bits,R2_bits\n0,1\n0.5,0.25\n");
  std::ostringstream multi;
  write_frontiers_csv(multi, {f, f});
  CHECK(multi.str().find("# region=x") == 0);
  auto svg = svg_frontiers({f}, "t");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("parallel_for visits each index once and rethrows") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(100, [](std::size_t i) {
                    if (i == 57) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  CHECK(worker_count() >= 1);
}
