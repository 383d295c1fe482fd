// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "pbwff/error.hpp"
#include "pbwff/fflv_polytope.hpp"

using namespace pbwff;

namespace {

long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Every binary step sequence from (i,i) to (j,j), kept when it never leaves
// t <= r.
std::set<DyckPath> brute_force_paths(int i, int j) {
  std::set<DyckPath> out;
  const int steps = 2 * (j - i);
  for (int mask = 0; mask < (1 << steps); ++mask) {
    int t = i, r = i;
    DyckPath p{{{t, r}}};
    bool ok = true;
    for (int s = 0; s < steps && ok; ++s) {
      if (mask & (1 << s)) ++t;
      else ++r;
      if (t > r || r > j) ok = false;
      p.roots.push_back({t, r});
    }
    if (ok && t == j && r == j) out.insert(p);
  }
  return out;
}

// Points of P(lambda) by checking every vector below the coordinate bounds.
std::vector<ExponentVector> brute_force_points(const Weight& lambda) {
  const RootSystem rs(lambda.rank());
  const auto desc = polytope(lambda);
  const int cap = lambda.height();
  std::vector<ExponentVector> out;
  ExponentVector s(static_cast<std::size_t>(rs.size()));
  std::function<void(int)> rec = [&](int k) {
    if (k == rs.size()) {
      if (desc.contains(s)) out.push_back(s);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      s[static_cast<std::size_t>(k)] = v;
      rec(k + 1);
    }
    s[static_cast<std::size_t>(k)] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("Dyck paths") {
  CHECK(dyck_paths(2, 2, 3).size() == 1);
  CHECK(dyck_paths(2, 2, 3).front().roots == std::vector<PositiveRoot>{{2, 2}});
  const auto d12 = dyck_paths(1, 2, 2);
  REQUIRE(d12.size() == 1);
  CHECK(d12.front().roots == std::vector<PositiveRoot>{{1, 1}, {1, 2}, {2, 2}});
  CHECK(dyck_paths(1, 3, 3).size() == 2);
  CHECK_THROWS_AS(dyck_paths(2, 1, 3), DomainError);
}

TEST_CASE("Dyck paths match brute force and Catalan numbers") {
  for (int i = 1; i <= 5; ++i)
    for (int j = i; j <= std::min(i + 4, 8); ++j) {
      const auto paths = dyck_paths(i, j, 8);
      const std::set<DyckPath> unique(paths.begin(), paths.end());
      CHECK(unique.size() == paths.size());
      CHECK(unique == brute_force_paths(i, j));
      CHECK(static_cast<long>(paths.size()) == catalan(j - i));
      for (const auto& p : paths) CHECK(is_valid_dyck_path(p));
    }
  CHECK_FALSE(is_valid_dyck_path(DyckPath{{{1, 1}, {2, 1}}}));
  CHECK_FALSE(is_valid_dyck_path(DyckPath{{{1, 1}, {1, 3}}}));
}

TEST_CASE("polytope inequalities") {
  const auto p1 = polytope(parse_weight("3"));
  REQUIRE(p1.inequalities.size() == 1);
  CHECK(p1.inequalities[0].bound == 3);

  const auto p = polytope(parse_weight("1,1"));
  REQUIRE(p.inequalities.size() == 3);
  CHECK(p.inequalities[0].path.roots == std::vector<PositiveRoot>{{1, 1}});
  CHECK(p.inequalities[0].bound == 1);
  CHECK(p.inequalities[1].path.roots == std::vector<PositiveRoot>{{1, 1}, {1, 2}, {2, 2}});
  CHECK(p.inequalities[1].bound == 2);
  CHECK(p.inequalities[2].path.roots == std::vector<PositiveRoot>{{2, 2}});
  CHECK(p.inequalities[2].bound == 1);

  for (const auto& ineq : polytope(parse_weight("0,0,0")).inequalities) CHECK(ineq.bound == 0);
}

TEST_CASE("lattice points") {
  CHECK(lattice_points(fundamental_weight(3, 1)).size() == 4);
  CHECK(lattice_points(parse_weight("1,1")).size() == 8);
  const auto zero = lattice_points(parse_weight("0,0"));
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().is_zero());
  const RootSystem rs(3);
  std::set<ExponentVector> w2;
  for (const auto& s : lattice_points(fundamental_weight(3, 2))) w2.insert(s);
  std::set<ExponentVector> expected{ExponentVector(6), ExponentVector::unit(rs, {2, 2}), ExponentVector::unit(rs, {1, 2}),
                                    ExponentVector::unit(rs, {2, 3}), ExponentVector::unit(rs, {1, 3}),
                                    ExponentVector::unit(rs, {1, 3}) + ExponentVector::unit(rs, {2, 2})};
  CHECK(w2 == expected);
  CHECK_THROWS_AS(lattice_points(parse_weight("1,1"), kernels::active_backend(), 5), BudgetExceeded);
}

TEST_CASE("lattice points match brute force and Weyl dimensions") {
  for (int n = 1; n <= 4; ++n)
    for (int h = 0; h <= 3; ++h)
      for (const auto& w : dominant_weights_of_height(n, h)) {
        const auto pts = lattice_points(w);
        CHECK(BigInt(static_cast<long>(pts.size())) == weyl_dim(w));
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        if (n <= 3) CHECK(pts == brute_force_points(w));
      }
}

TEST_CASE("Minkowski property") {
  CHECK(minkowski_check(parse_weight("0,0"), parse_weight("0,0")));
  CHECK(minkowski_check(fundamental_weight(3, 1), fundamental_weight(3, 2)));
  CHECK(minkowski_check(parse_weight("1,0,1"), fundamental_weight(3, 2)));
  for (int n = 1; n <= 3; ++n)
    for (int ha = 0; ha <= 3; ++ha)
      for (int hb = 0; ha + hb <= 3; ++hb)
        for (const auto& a : dominant_weights_of_height(n, ha))
          for (const auto& b : dominant_weights_of_height(n, hb)) {
            CHECK(minkowski_check(a, b));
            CHECK(minkowski_containment(a, b));
            const auto pa = polytope(a), pb = polytope(b), pab = polytope(a + b);
            for (std::size_t r = 0; r < pab.inequalities.size(); ++r)
              CHECK(pab.inequalities[r].bound == pa.inequalities[r].bound + pb.inequalities[r].bound);
          }
}

TEST_CASE("points of lambda lie in the polytope of lambda + mu") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : dominant_weights_of_height(n, 2))
      for (const auto& b : dominant_weights_of_height(n, 1)) {
        const auto big = polytope(a + b);
        for (const auto& s : lattice_points(a)) CHECK(big.contains(s));
      }
}

TEST_CASE("degree functions") {
  const RootSystem rs(3);
  std::vector<long> deg;
  for (const auto& r : rs.roots()) deg.push_back(ff_degree(ExponentVector::unit(rs, r), 3));
  CHECK(deg == std::vector<long>{3, 4, 3, 2, 2, 1});
  CHECK(ff_degree(ExponentVector(6), 3) == 0);
  const auto s = ExponentVector::unit(rs, {2, 2}) + ExponentVector::unit(rs, {3, 3}) + ExponentVector::unit(rs, {3, 3});
  CHECK(ff_degree(s, 3) == 4);
  CHECK(length_degree(ExponentVector::unit(rs, {1, 2})) == 1);
  CHECK(length_degree(ExponentVector::unit(rs, {1, 2}) + ExponentVector::unit(rs, {2, 3})) == 2);
  CHECK(length_degree(ExponentVector({3, 0, 0, 0, 0, 0})) == 3);
  const auto t = ExponentVector({1, 0, 2, 0, 1, 0});
  CHECK(ff_degree(s + t, 3) == ff_degree(s, 3) + ff_degree(t, 3));
}
