// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "pbwff/classical_module.hpp"
#include "pbwff/error.hpp"
#include "pbwff/fflv_polytope.hpp"

using namespace pbwff;

namespace {

ModuleVector wedge(std::vector<int> idx) { return basis_vector({WedgeBasisIndex{std::move(idx)}}); }

ModuleVector scaled(ModuleVector v, const Rational& c) {
  for (auto& [k, x] : v.entries) x *= c;
  return v;
}

ExponentVector exps(const RootSystem& rs, std::initializer_list<PositiveRoot> roots) {
  ExponentVector s(static_cast<std::size_t>(rs.size()));
  for (const auto& r : roots) s[static_cast<std::size_t>(rs.index(r))] += 1;
  return s;
}

}  // namespace

TEST_CASE("wedge indices") {
  CHECK_NOTHROW(validate_wedge(WedgeBasisIndex{{1, 3, 4}}, 3));
  CHECK_THROWS_AS(validate_wedge(WedgeBasisIndex{{2, 1}}, 3), DomainError);
  CHECK_THROWS_AS(validate_wedge(WedgeBasisIndex{{1, 5}}, 3), DomainError);
  CHECK_THROWS_AS(validate_wedge(WedgeBasisIndex{{0}}, 3), DomainError);
  const auto v = basis_vector({WedgeBasisIndex{{1}}, WedgeBasisIndex{{2, 4}}});
  REQUIRE(v.entries.size() == 1);
  const auto& key = v.entries.begin()->first;
  CHECK(key.factor(0).indices == std::vector<int>{1});
  CHECK(key.factor(1).indices == std::vector<int>{2, 4});
  CHECK(tensor_shape(parse_weight("2,0,1")) == std::vector<int>{1, 1, 3});
}

TEST_CASE("root vector action") {
  CHECK(root_vector_action(2, {1, 1}, wedge({1, 2})).is_zero());
  CHECK(root_vector_action(3, {2, 3}, wedge({1, 2})) == wedge({1, 4}));
  CHECK(root_vector_action(3, {1, 2}, wedge({1, 2})) == scaled(wedge({2, 3}), -1));
  CHECK(root_vector_action(3, {1, 1}, wedge({1})) == wedge({2}));
  CHECK(root_vector_action(3, {1, 1}, wedge({2})).is_zero());
  const auto w11 = basis_vector({WedgeBasisIndex{{1}}, WedgeBasisIndex{{1}}});
  const auto expected = basis_vector({WedgeBasisIndex{{3}}, WedgeBasisIndex{{1}}}) + basis_vector({WedgeBasisIndex{{1}}, WedgeBasisIndex{{3}}});
  CHECK(root_vector_action(2, {1, 2}, w11) == expected);
  CHECK(root_vector_action(3, {1, 3}, wedge({1, 2, 3})) == wedge({2, 3, 4}));
}

TEST_CASE("root vectors satisfy the commutation relations") {
  const int n = 3;
  const RootSystem rs(n);
  const auto v = basis_vector({WedgeBasisIndex{{1}}, WedgeBasisIndex{{1, 2}}});
  std::vector<ModuleVector> vectors{v};
  for (const auto& a : rs.roots()) vectors.push_back(root_vector_action(n, a, v));
  for (const auto& x : vectors)
    for (const auto& a : rs.roots())
      for (const auto& b : rs.roots()) {
        ModuleVector comm = root_vector_action(n, a, root_vector_action(n, b, x));
        comm -= root_vector_action(n, b, root_vector_action(n, a, x));
        if (a.j + 1 == b.i) {
          // [f_{i,k}, f_{k+1,j}] = -f_{i,j} for the matrix units used here.
          CHECK(comm == scaled(root_vector_action(n, {a.i, b.j}, x), -1));
        } else if (b.j + 1 == a.i) {
          CHECK(comm == root_vector_action(n, {b.i, a.j}, x));
        } else {
          CHECK(comm.is_zero());
        }
      }
}

TEST_CASE("highest weight vectors") {
  CHECK(highest_weight_vector(parse_weight("0,1,0")) == wedge({1, 2}));
  CHECK(highest_weight_vector(parse_weight("2,0")) == basis_vector({WedgeBasisIndex{{1}}, WedgeBasisIndex{{1}}}));
  CHECK(highest_weight_vector(parse_weight("1,1")) == basis_vector({WedgeBasisIndex{{1}}, WedgeBasisIndex{{1, 2}}}));
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : dominant_weights_of_height(n, 2))
      for (const auto& a : RootSystem(n).roots())
        if (a.i == a.j && lambda.m[static_cast<std::size_t>(a.i - 1)] == 0)
          CHECK(root_vector_action(n, a, highest_weight_vector(lambda)).is_zero());
}

TEST_CASE("monomial action") {
  const RootSystem rs(3);
  const auto order = directed_enumeration(3);
  const auto v = highest_weight_vector(parse_weight("0,1,0"));
  CHECK(monomial_action(3, ExponentVector(6), v, order) == v);
  CHECK(monomial_action(3, exps(rs, {{2, 2}}), v, order) == wedge({1, 3}));
  CHECK(monomial_action(3, exps(rs, {{1, 2}, {2, 3}}), v, order) == wedge({3, 4}));
  CHECK(monomial_action(3, exps(rs, {{1, 3}, {2, 2}}), v, order) == scaled(wedge({3, 4}), -1));
  CHECK(monomial_action(3, exps(rs, {{1, 1}}), v, order).is_zero());
}

TEST_CASE("fundamental basis formula") {
  const RootSystem rs(3);
  CHECK(fundamental_basis_formula(3, WedgeBasisIndex{{1, 2}}).is_zero());
  CHECK(fundamental_basis_formula(3, WedgeBasisIndex{{3, 4}}) == exps(rs, {{1, 3}, {2, 2}}));
  CHECK(ff_degree(exps(rs, {{1, 3}, {2, 2}}), 3) == 5);
  CHECK(ff_degree(exps(rs, {{1, 2}, {2, 3}}), 3) == 6);
  CHECK_THROWS_AS(fundamental_basis_formula(3, WedgeBasisIndex{{3, 3}}), DomainError);
}

TEST_CASE("fundamental basis formula lands in S and reproduces the wedge") {
  for (int n = 1; n <= 5; ++n) {
    const auto order = directed_enumeration(n);
    for (int k = 1; k <= n; ++k) {
      const auto lambda = fundamental_weight(n, k);
      const auto desc = polytope(lambda);
      const auto v = highest_weight_vector(lambda);
      std::vector<int> idx(static_cast<std::size_t>(k));
      for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
        idx.clear();
        for (int t = 0; t <= n; ++t)
          if (mask & (1 << t)) idx.push_back(t + 1);
        const auto s = fundamental_basis_formula(n, WedgeBasisIndex{idx});
        CHECK(desc.contains(s));
        const auto image = monomial_action(n, s, v, order);
        REQUIRE(image.entries.size() == 1);
        CHECK(image.entries.begin()->first.factor(0).indices == idx);
        CHECK(abs(image.entries.begin()->second) == 1);
      }
    }
  }
}

TEST_CASE("filtration") {
  const auto lambda = parse_weight("0,1,0");
  const auto ff = ff_weights(3);
  CHECK(filtration_space(lambda, 0, ff).rank() == 1);
  CHECK(filtration_space(lambda, 100, ff).rank() == 6);
  std::size_t prev = 0;
  for (long d = 0; d <= 12; ++d) {
    const auto r = filtration_space(lambda, d, ff).rank();
    CHECK(r >= prev);
    prev = r;
  }
  CHECK(prev == 6);
  const auto rep = graded_report(parse_weight("1,1"), ff_weights(2));
  long sum = 0;
  for (const auto& [d, dim] : rep.degree_dims) sum += dim;
  CHECK(sum == 8);
  CHECK(rep.module_dim == 8);
  CHECK(rep.lattice_points == 8);
}

TEST_CASE("echelon form") {
  RationalEchelon e;
  CHECK(e.insert(wedge({1, 2}) + wedge({1, 3})));
  CHECK(e.insert(wedge({1, 3})));
  CHECK_FALSE(e.insert(wedge({1, 2})));
  CHECK(e.contains(scaled(wedge({1, 2}), Rational(3, 7))));
  CHECK_FALSE(e.contains(wedge({2, 3})));
  CHECK(e.rank() == 2);
  CHECK(e.reduce(wedge({2, 3}) + wedge({1, 2})) == wedge({2, 3}));
}

TEST_CASE("monomial basis and monomial ideal") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) CHECK(verify_basis(fundamental_weight(n, k), ff_weights(n)));
  CHECK(verify_basis(parse_weight("1,1,0"), ff_weights(3)));
  CHECK(verify_basis(parse_weight("0,1,0"), length_weights(3)));
  const auto ok = verify_monomial_ideal(parse_weight("0,1,0"), ff_weights(3));
  CHECK(ok.monomial_ideal_ok);
  CHECK(ok.violations.empty());
  const auto bad = verify_monomial_ideal(parse_weight("0,1,0"), length_weights(3));
  CHECK_FALSE(bad.monomial_ideal_ok);
  CHECK(bad.violations == std::vector<ExponentVector>{exps(RootSystem(3), {{1, 2}, {2, 3}})});
  const auto zero = verify_monomial_ideal(parse_weight("0,0,0"), ff_weights(3));
  CHECK(zero.monomial_ideal_ok);
  CHECK(zero.basis_ok);
  CHECK(zero.module_dim == 1);
}

TEST_CASE("monomial basis and ideal for all small weights") {
  for (int n = 1; n <= 3; ++n)
    for (int h = 0; h <= 3; ++h)
      for (const auto& lambda : dominant_weights_of_height(n, h)) {
        const auto rep = graded_report(lambda, ff_weights(n));
        CAPTURE(to_string(lambda));
        CHECK(rep.basis_ok);
        CHECK(rep.monomial_ideal_ok);
        CHECK(rep.dependent.empty());
        CHECK(BigInt(rep.module_dim) == weyl_dim(lambda));
      }
}

TEST_CASE("ideal generators") {
  const RootSystem rs(3);
  const auto gens = ideal_generators(parse_weight("0,1,0"));
  CHECK(gens.size() == 11);
  const std::vector<ExponentVector> expected{
      exps(rs, {{1, 1}}),         exps(rs, {{3, 3}}),         exps(rs, {{1, 3}, {1, 3}}), exps(rs, {{1, 2}, {1, 2}}),
      exps(rs, {{2, 3}, {2, 3}}), exps(rs, {{2, 2}, {2, 2}}), exps(rs, {{2, 2}, {1, 2}}), exps(rs, {{2, 2}, {2, 3}}),
      exps(rs, {{1, 2}, {1, 3}}), exps(rs, {{2, 3}, {1, 3}}), exps(rs, {{1, 2}, {2, 3}})};
  for (const auto& g : expected) CHECK(std::find(gens.begin(), gens.end(), g) != gens.end());
  const RootSystem r2(2);
  auto trivial = ideal_generators(parse_weight("0,0"));
  std::sort(trivial.begin(), trivial.end());
  std::vector<ExponentVector> units{exps(r2, {{1, 1}}), exps(r2, {{1, 2}}), exps(r2, {{2, 2}})};
  std::sort(units.begin(), units.end());
  CHECK(trivial == units);
}

TEST_CASE("Cartan component") {
  CHECK(cartan_component_check(parse_weight("1,0"), parse_weight("1,0")));
  CHECK(cartan_component_check(parse_weight("1,0"), parse_weight("0,1")));
  CHECK(cartan_component_check(parse_weight("0,0"), parse_weight("0,1")));
  CHECK(cartan_component_check(parse_weight("0,1,0"), parse_weight("1,0,0")));
}

TEST_CASE("weight multiplicities") {
  for (int n = 1; n <= 3; ++n)
    for (int h = 1; h <= 3; ++h)
      for (const auto& lambda : dominant_weights_of_height(n, h)) {
        long total = 0;
        for (const auto& m : weight_multiplicities(lambda)) {
          CHECK(m.lattice_count == m.weight_space_dim);
          total += m.lattice_count;
        }
        CHECK(BigInt(total) == weyl_dim(lambda));
      }
  const auto mult = weight_multiplicities(parse_weight("1,1"));
  const auto zero = std::find_if(mult.begin(), mult.end(), [](const WeightMultiplicity& m) { return m.nu == RootVector{{1, 1}}; });
  REQUIRE(zero != mult.end());
  CHECK(zero->lattice_count == 2);
}

TEST_CASE("factor order only matters modulo lower filtration degree") {
  std::mt19937 rng(29);
  for (int n = 2; n <= 3; ++n) {
    const RootSystem rs(n);
    const auto ff = ff_weights(n);
    const auto order = directed_enumeration(n);
    for (int h = 1; h <= 2; ++h)
      for (const auto& lambda : dominant_weights_of_height(n, h)) {
        const auto v = highest_weight_vector(lambda);
        const auto bound = weight_minus_roots_bound(lambda);
        for (int t = 0; t < 20; ++t) {
          ExponentVector s(static_cast<std::size_t>(rs.size()));
          for (int k = 0; k < 3; ++k) s[static_cast<std::size_t>(rng() % static_cast<unsigned>(rs.size()))] += 1;
          DirectedOrder shuffled = order;
          std::shuffle(shuffled.order.begin(), shuffled.order.end(), rng);
          const auto a = monomial_action(n, s, v, order);
          const auto b = monomial_action(n, s, v, shuffled);
          ModuleVector diff = a;
          diff -= b;
          const long d = ff.degree(s);
          CHECK(filtration_space(lambda, d - 1, ff).contains(diff));
        }
      }
  }
}
