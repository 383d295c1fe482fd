// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "pbwff/kernels.hpp"
#include "pbwff/root_system.hpp"
#include "pbwff/weight_function.hpp"

namespace pbwff {

/// Sequence of positive roots from alpha_{i,i} to alpha_{j,j}, each step
/// raising either the second index (t,r) -> (t,r+1) or the first (t+1,r).
struct DyckPath {
  std::vector<PositiveRoot> roots;
  PositiveRoot start() const { return roots.front(); }
  PositiveRoot end() const { return roots.back(); }
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

bool is_valid_dyck_path(const DyckPath& p);

/// Complete duplicate-free enumeration of D_{i,j}; |D_{i,j}| = Catalan(j-i).
std::vector<DyckPath> dyck_paths(int i, int j, int n);

struct Inequality {
  DyckPath path;
  int bound = 0;  // m_i + ... + m_j for a path from alpha_i to alpha_j
};

/// The inequality system of P(lambda), one row per Dyck path, ordered by
/// (start, end) and then by generation order within D_{i,j}.
struct PolytopeDescription {
  int rank = 1;
  std::vector<Inequality> inequalities;

  bool contains(const ExponentVector& s) const;
};

PolytopeDescription polytope(const Weight& lambda);

/// Default cap on |S(lambda)| before enumeration refuses to run.
inline constexpr std::int64_t kDefaultMaxLatticePoints = 5'000'000;

/// S(lambda) in lexicographic order of exponent vectors. Depth-first search in
/// the canonical root order; the range of each coordinate is the minimal slack
/// of the inequalities through that root, so every leaf is a lattice point.
std::vector<ExponentVector> lattice_points(const Weight& lambda,
                                           kernels::Backend backend = kernels::active_backend(),
                                           std::int64_t max_points = kDefaultMaxLatticePoints);

/// S(lambda) + S(mu) == S(lambda + mu).
bool minkowski_check(const Weight& lambda, const Weight& mu);
/// S(lambda) + S(mu) is a subset of S(lambda + mu).
bool minkowski_containment(const Weight& lambda, const Weight& mu);

std::vector<ExponentVector> sumset(const std::vector<ExponentVector>& a, const std::vector<ExponentVector>& b);

long ff_degree(const ExponentVector& s, int n);
long length_degree(const ExponentVector& s);

}  // namespace pbwff
