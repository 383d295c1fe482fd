// SPDX-License-Identifier: Apache-2.0
#include "pbwff/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pbwff/error.hpp"

namespace pbwff {

DimVector dim_vector(const RootSystem& rs, const RepClass& m) {
  return DimVector{root_sum(rs, m).c};
}

DimVector dim_vector(int n, const Indecomposable& u) {
  DimVector d{std::vector<long>(static_cast<std::size_t>(n), 0)};
  for (int t = u.i; t <= u.j; ++t) d.d[static_cast<std::size_t>(t - 1)] = 1;
  return d;
}

long total_dim(const DimVector& d) { return std::accumulate(d.d.begin(), d.d.end(), 0L); }

bool is_projective(int n, const Indecomposable& u) { return u.j == n; }
bool is_injective(const Indecomposable& u) { return u.i == 1; }

int hom_dim(int n, const Indecomposable& from, const Indecomposable& to) {
  const RootSystem rs(n);
  if (!rs.contains(from) || !rs.contains(to)) throw DomainError("hom_dim: rank mismatch");
  return (to.i <= from.i && from.i <= to.j && to.j <= from.j) ? 1 : 0;
}

long hom_dim_reps(const RootSystem& rs, const RepClass& from, const RepClass& to) {
  if (static_cast<int>(from.size()) != rs.size() || static_cast<int>(to.size()) != rs.size()) {
    throw DomainError("hom_dim_reps: rank mismatch");
  }
  long total = 0;
  for (int a = 0; a < rs.size(); ++a) {
    if (from[static_cast<std::size_t>(a)] == 0) continue;
    for (int b = 0; b < rs.size(); ++b) {
      if (to[static_cast<std::size_t>(b)] == 0) continue;
      const auto& v = rs.root(a);
      const auto& m = rs.root(b);
      if (m.i <= v.i && v.i <= m.j && m.j <= v.j) {
        total += static_cast<long>(from[static_cast<std::size_t>(a)]) * to[static_cast<std::size_t>(b)];
      }
    }
  }
  return total;
}

long euler_form(const DimVector& d, const DimVector& e) {
  if (d.d.size() != e.d.size()) throw DomainError("euler_form: rank mismatch");
  long v = 0;
  for (std::size_t i = 0; i < d.d.size(); ++i) {
    v += d.d[i] * e.d[i];
    if (i + 1 < d.d.size()) v -= d.d[i] * e.d[i + 1];
  }
  return v;
}

long ext_dim_reps(const RootSystem& rs, const RepClass& from, const RepClass& to) {
  return hom_dim_reps(rs, from, to) - euler_form(dim_vector(rs, from), dim_vector(rs, to));
}

long mu0(const RootSystem& rs, const RepClass& m) {
  RepClass v0(std::vector<int>(static_cast<std::size_t>(rs.size()), 1));
  return hom_dim_reps(rs, v0, m);
}

std::optional<Indecomposable> ar_translate(int n, const Indecomposable& u) {
  validate_rank(n);
  if (is_projective(n, u)) return std::nullopt;
  return Indecomposable{u.i + 1, u.j + 1};
}

std::optional<Indecomposable> ar_cotranslate(int n, const Indecomposable& u) {
  validate_rank(n);
  if (is_injective(u)) return std::nullopt;
  return Indecomposable{u.i - 1, u.j - 1};
}

ARSequence ar_sequence(int n, const Indecomposable& u) {
  const RootSystem rs(n);
  if (!rs.contains(u)) throw DomainError("ar_sequence: root not in rank");
  auto left = ar_translate(n, u);
  if (!left) throw DomainError("ar_sequence: " + to_string(u) + " is projective");
  RepClass middle(static_cast<std::size_t>(rs.size()));
  if (u.i + 1 <= u.j) middle[static_cast<std::size_t>(rs.index(u.i + 1, u.j))] += 1;
  middle[static_cast<std::size_t>(rs.index(u.i, u.j + 1))] += 1;
  return ARSequence{*left, std::move(middle), u};
}

std::vector<PositiveRoot> representation_directed_order(int n) {
  const RootSystem rs(n);
  const int size = rs.size();
  std::vector<int> indegree(static_cast<std::size_t>(size), 0);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (a != b && hom_dim(n, rs.root(a), rs.root(b))) ++indegree[static_cast<std::size_t>(b)];

  std::vector<PositiveRoot> order;
  std::vector<bool> done(static_cast<std::size_t>(size), false);
  while (static_cast<int>(order.size()) < size) {
    int pick = -1;
    for (int a = 0; a < size; ++a) {
      if (!done[static_cast<std::size_t>(a)] && indegree[static_cast<std::size_t>(a)] == 0) {
        pick = a;
        break;
      }
    }
    if (pick < 0) throw VerificationFailure("nonzero-Hom relation has a cycle");
    done[static_cast<std::size_t>(pick)] = true;
    order.push_back(rs.root(pick));
    for (int b = 0; b < size; ++b)
      if (b != pick && hom_dim(n, rs.root(pick), rs.root(b))) --indegree[static_cast<std::size_t>(b)];
  }
  return order;
}

bool is_representation_directed(int n, const std::vector<PositiveRoot>& order) {
  const RootSystem rs(n);
  if (static_cast<int>(order.size()) != rs.size()) return false;
  std::vector<PositiveRoot> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != rs.roots()) return false;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t l = 0; l < order.size(); ++l) {
      const auto uk = ExponentVector::unit(rs, order[k]);
      const auto ul = ExponentVector::unit(rs, order[l]);
      if (k > l && hom_dim_reps(rs, uk, ul) != 0) return false;
      if (k <= l && ext_dim_reps(rs, uk, ul) != 0) return false;
    }
  }
  return true;
}

std::vector<long> decompose_weight_function(const WeightFunction& w) {
  const RootSystem rs(w.rank);
  if (static_cast<int>(w.values.size()) != rs.size()) throw DomainError("weight function has wrong length");
  // The Hom matrix is unitriangular along a representation-directed order,
  // so forward substitution stays in the integers.
  const auto order = representation_directed_order(w.rank);
  std::vector<long> a(static_cast<std::size_t>(rs.size()), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& m = order[k];
    long rest = w.value(rs, m);
    for (std::size_t v = 0; v < k; ++v) rest -= a[static_cast<std::size_t>(rs.index(order[v]))] * hom_dim(w.rank, order[v], m);
    if (hom_dim(w.rank, m, m) != 1) throw VerificationFailure("Hom matrix is not unitriangular");
    a[static_cast<std::size_t>(rs.index(m))] = rest;
  }
  return a;
}

WeightFunction compose_weight_function(int n, const std::vector<long>& coefficients) {
  const RootSystem rs(n);
  if (static_cast<int>(coefficients.size()) != rs.size()) throw DomainError("coefficient vector has wrong length");
  WeightFunction w{n, std::vector<long>(static_cast<std::size_t>(rs.size()), 0)};
  for (int m = 0; m < rs.size(); ++m)
    for (int v = 0; v < rs.size(); ++v)
      w.values[static_cast<std::size_t>(m)] += coefficients[static_cast<std::size_t>(v)] * hom_dim(n, rs.root(v), rs.root(m));
  return w;
}

WeightFunction hom_weight_function(const RootSystem& rs, const RepClass& v) {
  WeightFunction w{rs.rank(), {}};
  for (const auto& r : rs.roots()) w.values.push_back(hom_dim_reps(rs, v, ExponentVector::unit(rs, r)));
  return w;
}

std::string to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Strong:
      return "admissible-strong";
    case Admissibility::Admissible:
      return "admissible";
    case Admissibility::NotAdmissible:
      return "not-admissible";
  }
  return "not-admissible";
}

Classification classify_weight_function(const WeightFunction& w) {
  const RootSystem rs(w.rank);
  Classification c;
  c.coefficients = decompose_weight_function(w);
  const bool nonnegative = std::all_of(c.coefficients.begin(), c.coefficients.end(), [](long a) { return a >= 0; });
  if (!nonnegative) {
    c.kind = Admissibility::NotAdmissible;
    return c;
  }
  bool strong = true;
  for (int k = 0; k < rs.size(); ++k) {
    const auto& v = rs.root(k);
    const bool needed = !is_projective(w.rank, v) || (v.i == w.rank && v.j == w.rank);
    if (needed && c.coefficients[static_cast<std::size_t>(k)] < 1) strong = false;
  }
  c.kind = strong ? Admissibility::Strong : Admissibility::Admissible;
  return c;
}

bool degeneration_leq(const RootSystem& rs, const RepClass& m, const RepClass& mprime) {
  if (!(dim_vector(rs, m) == dim_vector(rs, mprime))) throw DomainError("degeneration_leq: dimension vectors differ");
  for (const auto& v : rs.roots()) {
    const auto e = ExponentVector::unit(rs, v);
    if (hom_dim_reps(rs, e, m) > hom_dim_reps(rs, e, mprime)) return false;
  }
  return true;
}

std::vector<RepClass> rep_classes_of_dim(const RootSystem& rs, const DimVector& d) {
  if (static_cast<int>(d.d.size()) != rs.rank()) throw DomainError("rep_classes_of_dim: rank mismatch");
  std::vector<RepClass> out;
  RepClass cur(static_cast<std::size_t>(rs.size()));
  std::vector<long> left = d.d;
  std::function<void(int)> rec = [&](int k) {
    if (k == rs.size()) {
      if (std::all_of(left.begin(), left.end(), [](long x) { return x == 0; })) out.push_back(cur);
      return;
    }
    const auto& r = rs.root(k);
    long cap = left[static_cast<std::size_t>(r.i - 1)];
    for (int t = r.i; t <= r.j; ++t) cap = std::min(cap, left[static_cast<std::size_t>(t - 1)]);
    for (long v = 0; v <= cap; ++v) {
      cur[static_cast<std::size_t>(k)] = static_cast<int>(v);
      for (int t = r.i; t <= r.j; ++t) left[static_cast<std::size_t>(t - 1)] -= v;
      rec(k + 1);
      for (int t = r.i; t <= r.j; ++t) left[static_cast<std::size_t>(t - 1)] += v;
    }
    cur[static_cast<std::size_t>(k)] = 0;
  };
  rec(0);
  return out;
}

}  // namespace pbwff
