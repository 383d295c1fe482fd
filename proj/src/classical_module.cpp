// SPDX-License-Identifier: Apache-2.0
#include "pbwff/classical_module.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "pbwff/error.hpp"
#include "pbwff/fflv_polytope.hpp"

namespace pbwff {

namespace {

std::size_t sz(long v) { return static_cast<std::size_t>(v); }

std::uint16_t mask_of(const WedgeBasisIndex& w) {
  std::uint16_t m = 0;
  for (int t : w.indices) m = static_cast<std::uint16_t>(m | (1U << (t - 1)));
  return m;
}

void check_module_budget(const Weight& lambda, const ModuleBudget& budget) {
  validate_rank(lambda.rank());
  if (weyl_dim(lambda) > budget.max_module_dim)
    throw BudgetExceeded("dim V(" + to_string(lambda) + ") = " + to_string(weyl_dim(lambda)) + " exceeds module budget");
}

ModuleVector apply_power(int n, const PositiveRoot& r, ModuleVector v, int k) {
  for (int t = 0; t < k && !v.is_zero(); ++t) v = root_vector_action(n, r, v);
  return v;
}

}  // namespace

void validate_wedge(const WedgeBasisIndex& idx, int n) {
  for (std::size_t t = 0; t < idx.indices.size(); ++t) {
    const int v = idx.indices[t];
    if (v < 1 || v > n + 1) throw DomainError("wedge index out of range");
    if (t > 0 && idx.indices[t - 1] >= v) throw DomainError("wedge indices must increase strictly");
  }
}

WedgeBasisIndex TensorBasisIndex::factor(std::size_t k) const {
  WedgeBasisIndex w;
  for (int t = 0; t < 16; ++t)
    if (factors[k] & (1U << t)) w.indices.push_back(t + 1);
  return w;
}

bool operator<(const TensorBasisIndex& a, const TensorBasisIndex& b) {
  const std::size_t len = std::min(a.factors.size(), b.factors.size());
  for (std::size_t k = 0; k < len; ++k) {
    const unsigned x = a.factors[k], y = b.factors[k];
    if (x == y) continue;
    if (std::popcount(x) != std::popcount(y)) return std::popcount(x) < std::popcount(y);
    const unsigned diff = x ^ y;
    return (x & (diff & (~diff + 1U))) != 0;
  }
  return a.factors.size() < b.factors.size();
}

void ModuleVector::add(const TensorBasisIndex& key, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = entries.try_emplace(key, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) entries.erase(it);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [k, c] : o.entries) add(k, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [k, c] : o.entries) add(k, -c);
  return *this;
}

ModuleVector basis_vector(const std::vector<WedgeBasisIndex>& factors) {
  TensorBasisIndex key;
  for (const auto& f : factors) key.factors.push_back(mask_of(f));
  ModuleVector v;
  v.add(key, 1);
  return v;
}

std::vector<int> tensor_shape(const Weight& lambda) {
  std::vector<int> shape;
  for (int k = 1; k <= lambda.rank(); ++k)
    for (int c = 0; c < lambda.m[sz(k - 1)]; ++c) shape.push_back(k);
  return shape;
}

ModuleVector root_vector_action(int n, const PositiveRoot& alpha, const ModuleVector& v) {
  if (!RootSystem(n).contains(alpha)) throw DomainError("root " + to_string(alpha) + " not in rank " + std::to_string(n));
  const unsigned from = 1U << (alpha.i - 1);
  const unsigned to = 1U << alpha.j;
  // Bits strictly between from and to.
  const unsigned between = (to - 1U) & ~((from << 1U) - 1U);
  ModuleVector out;
  for (const auto& [key, c] : v.entries) {
    for (std::size_t f = 0; f < key.factors.size(); ++f) {
      const unsigned m = key.factors[f];
      if (!(m & from) || (m & to)) continue;
      TensorBasisIndex image = key;
      image.factors[f] = static_cast<std::uint16_t>(m ^ from ^ to);
      out.add(image, std::popcount(m & between) % 2 == 0 ? c : Rational(-c));
    }
  }
  return out;
}

ModuleVector highest_weight_vector(const std::vector<int>& shape) {
  std::vector<WedgeBasisIndex> factors;
  for (int k : shape) {
    WedgeBasisIndex w;
    for (int t = 1; t <= k; ++t) w.indices.push_back(t);
    factors.push_back(std::move(w));
  }
  return basis_vector(factors);
}

ModuleVector highest_weight_vector(const Weight& lambda) {
  validate_rank(lambda.rank());
  return highest_weight_vector(tensor_shape(lambda));
}

ModuleVector monomial_action(int n, const ExponentVector& s, const ModuleVector& v, const DirectedOrder& order) {
  const RootSystem rs(n);
  if (static_cast<int>(s.size()) != rs.size()) throw DomainError("exponent vector has wrong length");
  ModuleVector cur = v;
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it)
    cur = apply_power(n, *it, std::move(cur), s[sz(rs.index(*it))]);
  return cur;
}

bool RationalEchelon::insert(const ModuleVector& v) {
  ModuleVector r = reduce(v);
  if (r.is_zero()) return false;
  const Rational lead = r.entries.begin()->second;
  for (auto& [k, c] : r.entries) c /= lead;
  const TensorBasisIndex pivot = r.entries.begin()->first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

ModuleVector RationalEchelon::reduce(ModuleVector v) const {
  auto it = v.entries.begin();
  while (it != v.entries.end()) {
    const auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const TensorBasisIndex pivot = it->first;
    const Rational c = it->second;
    for (const auto& [k, x] : row->second.entries) v.add(k, -c * x);
    it = v.entries.upper_bound(pivot);
  }
  return v;
}

std::map<ExponentVector, ModuleVector> monomial_images(const Weight& lambda, const DirectedOrder& order,
                                                        const ModuleBudget& budget) {
  check_module_budget(lambda, budget);
  const int n = lambda.rank();
  const RootSystem rs(n);
  if (order.rank != n) throw DomainError("order has wrong rank");
  std::vector<long> left = weight_minus_roots_bound(lambda).c;
  std::vector<PositiveRoot> seq(order.order.rbegin(), order.order.rend());

  std::map<ExponentVector, ModuleVector> out;
  ExponentVector s(sz(rs.size()));
  std::int64_t visited = 0;
  std::function<void(std::size_t, const ModuleVector&)> rec = [&](std::size_t pos, const ModuleVector& v) {
    if (++visited > budget.max_monomials) throw BudgetExceeded("monomial enumeration budget exceeded");
    if (pos == seq.size()) {
      out.emplace(s, v);
      return;
    }
    const auto& r = seq[pos];
    const std::size_t idx = sz(rs.index(r));
    ModuleVector cur = v;
    int k = 0;
    while (true) {
      rec(pos + 1, cur);
      bool fits = true;
      for (int t = r.i; t <= r.j; ++t)
        if (left[sz(t - 1)] < 1) fits = false;
      if (!fits) break;
      cur = root_vector_action(n, r, cur);
      if (cur.is_zero()) break;
      for (int t = r.i; t <= r.j; ++t) --left[sz(t - 1)];
      s[idx] = ++k;
    }
    for (int t = r.i; t <= r.j; ++t) left[sz(t - 1)] += k;
    s[idx] = 0;
  };
  rec(0, highest_weight_vector(lambda));
  return out;
}

RationalEchelon filtration_space(const Weight& lambda, long d, const WeightFunction& w, const ModuleBudget& budget) {
  if (w.rank != lambda.rank()) throw DomainError("weight function rank mismatch");
  RationalEchelon e;
  for (const auto& [s, v] : monomial_images(lambda, directed_enumeration(lambda.rank()), budget))
    if (w.degree(s) <= d) e.insert(v);
  return e;
}

GradedReport graded_report(const Weight& lambda, const WeightFunction& w, const ModuleBudget& budget) {
  const int n = lambda.rank();
  if (w.rank != n) throw DomainError("weight function rank mismatch");
  const DirectedOrder order = directed_enumeration(n);
  const auto images = monomial_images(lambda, order, budget);
  const auto points = lattice_points(lambda);
  const std::set<ExponentVector> in_s(points.begin(), points.end());

  GradedReport rep;
  rep.lambda = lambda;
  rep.order = order.order;
  rep.lattice_points = static_cast<long>(points.size());

  std::map<long, std::vector<const std::pair<const ExponentVector, ModuleVector>*>> by_degree;
  for (const auto& entry : images) by_degree[w.degree(entry.first)].push_back(&entry);
  for (const auto& s : points) {
    if (!images.count(s)) {
      rep.dependent.push_back(s);
      by_degree[w.degree(s)];
    }
  }

  RationalEchelon all, basis;
  for (const auto& [d, group] : by_degree) {
    const std::size_t before = all.rank();
    for (const auto* entry : group)
      if (!in_s.count(entry->first) && !all.contains(entry->second)) rep.violations.push_back(entry->first);
    for (const auto* entry : group) {
      all.insert(entry->second);
      if (in_s.count(entry->first) && !basis.insert(entry->second)) rep.dependent.push_back(entry->first);
    }
    if (basis.rank() != all.rank()) rep.dependent.push_back(group.empty() ? ExponentVector() : group.front()->first);
    rep.degree_dims[d] = static_cast<long>(all.rank() - before);
  }
  rep.module_dim = static_cast<long>(all.rank());
  std::sort(rep.violations.begin(), rep.violations.end());
  std::sort(rep.dependent.begin(), rep.dependent.end());
  rep.dependent.erase(std::unique(rep.dependent.begin(), rep.dependent.end()), rep.dependent.end());
  const bool dim_ok = BigInt(rep.module_dim) == weyl_dim(lambda) && rep.lattice_points == rep.module_dim;
  rep.basis_ok = rep.dependent.empty() && dim_ok;
  rep.monomial_ideal_ok = rep.violations.empty() && dim_ok;
  return rep;
}

bool verify_basis(const Weight& lambda, const WeightFunction& w, const ModuleBudget& budget) {
  return graded_report(lambda, w, budget).basis_ok;
}

GradedReport verify_monomial_ideal(const Weight& lambda, const WeightFunction& w, const ModuleBudget& budget) {
  return graded_report(lambda, w, budget);
}

std::vector<ExponentVector> ideal_generators(const Weight& lambda) {
  const RootSystem rs(lambda.rank());
  const auto points = lattice_points(lambda);
  const std::set<ExponentVector> in_s(points.begin(), points.end());
  std::set<ExponentVector> out;
  for (const auto& t : points)
    for (int a = 0; a < rs.size(); ++a) {
      ExponentVector s = t;
      ++s[sz(a)];
      if (in_s.count(s)) continue;
      bool minimal = true;
      for (int b = 0; b < rs.size() && minimal; ++b) {
        if (s[sz(b)] == 0) continue;
        ExponentVector below = s;
        --below[sz(b)];
        minimal = in_s.count(below) > 0;
      }
      if (minimal) out.insert(s);
    }
  return {out.begin(), out.end()};
}

ExponentVector fundamental_basis_formula(int n, const WedgeBasisIndex& idx) {
  validate_rank(n);
  validate_wedge(idx, n);
  const int k = idx.k();
  if (k < 1 || k > n) throw DomainError("wedge degree must lie in 1..n");
  const RootSystem rs(n);
  std::vector<int> missing, above;
  for (int t = 1; t <= k; ++t)
    if (!std::binary_search(idx.indices.begin(), idx.indices.end(), t)) missing.push_back(t);
  for (int v : idx.indices)
    if (v > k) above.push_back(v);
  ExponentVector s(sz(rs.size()));
  // Pair the smallest missing index with the largest index above k.
  for (std::size_t t = 0; t < missing.size(); ++t) ++s[sz(rs.index(missing[t], above[above.size() - 1 - t] - 1))];
  return s;
}

bool cartan_component_check(const Weight& lambda, const Weight& mu, const ModuleBudget& budget) {
  if (lambda.rank() != mu.rank()) throw DomainError("cartan_component_check: rank mismatch");
  const Weight sum = lambda + mu;
  check_module_budget(sum, budget);
  const int n = lambda.rank();
  std::vector<int> shape = tensor_shape(lambda);
  for (int k : tensor_shape(mu)) shape.push_back(k);
  const ModuleVector v = highest_weight_vector(shape);
  const DirectedOrder order = directed_enumeration(n);
  const auto points = sumset(lattice_points(lambda), lattice_points(mu));
  RationalEchelon e;
  for (const auto& s : points)
    if (!e.insert(monomial_action(n, s, v, order))) return false;
  return BigInt(static_cast<long>(points.size())) == weyl_dim(sum);
}

std::vector<WeightMultiplicity> weight_multiplicities(const Weight& lambda, const ModuleBudget& budget) {
  const int n = lambda.rank();
  const RootSystem rs(n);
  const auto images = monomial_images(lambda, directed_enumeration(n), budget);
  std::map<std::vector<long>, RationalEchelon> spaces;
  std::map<std::vector<long>, long> counts;
  for (const auto& [s, v] : images) spaces[root_sum(rs, s).c].insert(v);
  for (const auto& s : lattice_points(lambda)) ++counts[root_sum(rs, s).c];
  std::set<std::vector<long>> keys;
  for (const auto& [k, e] : spaces) keys.insert(k);
  for (const auto& [k, c] : counts) keys.insert(k);
  std::vector<WeightMultiplicity> out;
  for (const auto& k : keys) {
    const auto sp = spaces.find(k);
    const auto ct = counts.find(k);
    out.push_back(WeightMultiplicity{RootVector{k}, ct == counts.end() ? 0 : ct->second,
                                     sp == spaces.end() ? 0 : static_cast<long>(sp->second.rank())});
  }
  return out;
}

}  // namespace pbwff
