// SPDX-License-Identifier: Apache-2.0
#include "pbwff/fflv_polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pbwff/error.hpp"

namespace pbwff {

WeightFunction ff_weights(int n) {
  RootSystem rs(n);
  WeightFunction w{n, {}};
  for (const auto& r : rs.roots()) w.values.push_back(static_cast<long>(r.j - r.i + 1) * (n - r.j + 1));
  return w;
}

WeightFunction length_weights(int n) { return constant_weights(n, 1); }

WeightFunction constant_weights(int n, long value) {
  RootSystem rs(n);
  return WeightFunction{n, std::vector<long>(static_cast<std::size_t>(rs.size()), value)};
}

bool is_valid_dyck_path(const DyckPath& p) {
  if (p.roots.empty() || !p.start().is_simple() || !p.end().is_simple()) return false;
  for (std::size_t k = 0; k < p.roots.size(); ++k) {
    const auto& r = p.roots[k];
    if (r.i > r.j || r.i < 1) return false;
    if (k == 0) continue;
    const auto& prev = p.roots[k - 1];
    const bool up = r.i == prev.i && r.j == prev.j + 1;
    const bool right = r.i == prev.i + 1 && r.j == prev.j;
    if (!up && !right) return false;
  }
  return true;
}

std::vector<DyckPath> dyck_paths(int i, int j, int n) {
  validate_rank(n);
  if (i > j) throw DomainError("dyck_paths requires i <= j");
  if (i < 1 || j > n) throw DomainError("dyck_paths endpoints out of range");
  std::vector<DyckPath> out;
  DyckPath cur;
  std::function<void(int, int)> walk = [&](int t, int r) {
    cur.roots.push_back({t, r});
    if (t == j && r == j) {
      out.push_back(cur);
    } else {
      if (r < j) walk(t, r + 1);
      if (t + 1 <= r) walk(t + 1, r);
    }
    cur.roots.pop_back();
  };
  walk(i, i);
  return out;
}

bool PolytopeDescription::contains(const ExponentVector& s) const {
  RootSystem rs(rank);
  if (static_cast<int>(s.size()) != rs.size()) throw DomainError("exponent vector of wrong rank");
  if (std::any_of(s.s.begin(), s.s.end(), [](int x) { return x < 0; })) return false;
  for (const auto& ineq : inequalities) {
    long sum = 0;
    for (const auto& r : ineq.path.roots) sum += s[static_cast<std::size_t>(rs.index(r))];
    if (sum > ineq.bound) return false;
  }
  return true;
}

PolytopeDescription polytope(const Weight& lambda) {
  const int n = lambda.rank();
  validate_rank(n);
  PolytopeDescription desc{n, {}};
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      int bound = 0;
      for (int t = i; t <= j; ++t) bound += lambda.m[static_cast<std::size_t>(t - 1)];
      for (auto& p : dyck_paths(i, j, n)) desc.inequalities.push_back({std::move(p), bound});
    }
  }
  return desc;
}

std::vector<ExponentVector> lattice_points(const Weight& lambda, kernels::Backend backend, std::int64_t max_points) {
  const int n = lambda.rank();
  validate_rank(n);
  if (weyl_dim(lambda) > max_points) throw BudgetExceeded("lattice point budget exceeded for lambda=" + to_string(lambda));

  const RootSystem rs(n);
  const auto desc = polytope(lambda);
  const std::size_t rows = desc.inequalities.size();
  const std::size_t roots = static_cast<std::size_t>(rs.size());

  std::vector<std::int32_t> bounds(rows);
  std::vector<std::vector<std::int32_t>> incidence(roots, std::vector<std::int32_t>(rows, 0));
  for (std::size_t row = 0; row < rows; ++row) {
    bounds[row] = desc.inequalities[row].bound;
    for (const auto& r : desc.inequalities[row].path.roots) incidence[static_cast<std::size_t>(rs.index(r))][row] = 1;
  }

  const auto& k = kernels::table(backend);
  std::vector<std::int32_t> sums(rows, 0);
  std::vector<ExponentVector> out;
  ExponentVector cur(roots);

  std::function<void(std::size_t)> dfs = [&](std::size_t depth) {
    if (depth == roots) {
      out.push_back(cur);
      return;
    }
    const auto& col = incidence[depth];
    const std::int32_t upper = k.min_slack(sums, bounds, col);
    for (std::int32_t v = 0; v <= upper; ++v) {
      cur[depth] = v;
      dfs(depth + 1);
      if (v < upper) k.add_scaled(sums, col, 1);
    }
    if (upper > 0) k.add_scaled(sums, col, -upper);
    cur[depth] = 0;
  };
  dfs(0);
  return out;
}

std::vector<ExponentVector> sumset(const std::vector<ExponentVector>& a, const std::vector<ExponentVector>& b) {
  std::set<ExponentVector> acc;
  for (const auto& x : a)
    for (const auto& y : b) acc.insert(x + y);
  return {acc.begin(), acc.end()};
}

bool minkowski_check(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank()) throw DomainError("minkowski_check: rank mismatch");
  return sumset(lattice_points(lambda), lattice_points(mu)) == lattice_points(lambda + mu);
}

bool minkowski_containment(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank()) throw DomainError("minkowski_containment: rank mismatch");
  const auto target = polytope(lambda + mu);
  for (const auto& s : sumset(lattice_points(lambda), lattice_points(mu)))
    if (!target.contains(s)) return false;
  return true;
}

long ff_degree(const ExponentVector& s, int n) { return ff_weights(n).degree(s); }

long length_degree(const ExponentVector& s) { return s.total(); }

}  // namespace pbwff
