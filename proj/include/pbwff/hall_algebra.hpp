// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pbwff/exact_arith.hpp"
#include "pbwff/gf_linalg.hpp"
#include "pbwff/quiver.hpp"
#include "pbwff/weight_function.hpp"

// Hall algebra of the equioriented A_n quiver over Q(q):
//   u[M] u[N] = q^<dim M, dim N> sum_X F^X_{M,N}(q^2) u[X],
// where F^X_{M,N}(u) is recovered by counting subrepresentations over small
// prime fields and interpolating.

namespace pbwff {

/// A representation over GF(p): one matrix of shape dims[k+1] x dims[k] per
/// arrow k -> k+1.
struct FiniteFieldRep {
  int p = 2;
  DimVector dims;
  std::vector<gf::Matrix> maps;

  int rank() const { return static_cast<int>(dims.d.size()); }
  /// Throws DomainError on inconsistent shapes or a non-prime p > 13.
  void validate() const;
};

/// The direct sum of interval modules with identity arrow maps.
FiniteFieldRep model_rep(const RootSystem& rs, const RepClass& x, int p);

/// Krull-Schmidt multiplicities from ranks of composite arrow maps.
RepClass classify_rep(const FiniteFieldRep& rep);

/// Recovers multiplicities from the rank profile r(i,j) (1-based, i <= j);
/// r(i,i) is dim at vertex i.
RepClass class_from_rank_profile(const RootSystem& rs, const std::vector<std::vector<long>>& r);

/// A permutation beta_1..beta_N of the positive roots with
/// Hom(U_k, U_l) = 0 for k > l and Ext^1(U_k, U_l) = 0 for k <= l.
struct DirectedOrder {
  int rank = 1;
  std::vector<PositiveRoot> order;
  int position(const PositiveRoot& r) const;
};

DirectedOrder directed_enumeration(int n);

/// Finite linear combination of u[M] with Laurent coefficients; zero
/// coefficients are never stored.
class HallElement {
public:
  using Terms = std::map<RepClass, LaurentPoly>;

  HallElement() = default;
  static HallElement basis(const RepClass& m, const LaurentPoly& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const RepClass& m) const;
  void add(const RepClass& m, const LaurentPoly& c);

  HallElement& operator+=(const HallElement& o);
  HallElement& operator-=(const HallElement& o);
  HallElement scaled(const LaurentPoly& c) const;
  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
  friend bool operator==(const HallElement& a, const HallElement& b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

struct HallBudget {
  int max_total_dim = 6;
  std::vector<int> primes{2, 3, 5, 7, 11, 13};
};

/// One interpolated Hall polynomial together with its held-out check.
struct HallPolynomialRecord {
  RepClass m, n, x;
  LaurentPoly poly;  // polynomial in u
  int degree_bound = 0;
  std::vector<int> interpolation_primes;
  int held_out_prime = 0;
  BigInt held_out_count;
};

/// Hall algebra of one rank, with memoized subrepresentation censuses,
/// Hall polynomials, and basis products. Safe for concurrent use.
class HallAlgebra {
public:
  explicit HallAlgebra(int n, HallBudget budget = {});

  int rank() const { return rs_.rank(); }
  const RootSystem& roots() const { return rs_; }
  const HallBudget& budget() const { return budget_; }

  /// Number of subrepresentations U of X with U = N and X/U = M over GF(p).
  /// Zero when dim N + dim M != dim X.
  BigInt subrep_count(const RepClass& x, const RepClass& n, const RepClass& m, int p);

  /// Every (N, M) occurring as (U, X/U) for a subrepresentation U of X with
  /// the given dimension vector over GF(p).
  std::vector<std::pair<RepClass, RepClass>> extension_pairs(const RepClass& x, const std::vector<long>& dim_sub, int p);

  /// F^X_{M,N}(u) in Z[u], interpolated and verified at a held-out prime.
  LaurentPoly hall_polynomial(const RepClass& m, const RepClass& n, const RepClass& x);
  std::vector<HallPolynomialRecord> polynomial_log() const;

  /// u[M] u[N], memoized.
  HallElement basis_product(const RepClass& m, const RepClass& n);
  HallElement mult(const HallElement& a, const HallElement& b);

  HallElement unit() const;
  /// F_[M] = q^{dim End M - dim M} u[M].
  HallElement pbw_element(const RepClass& m) const;
  LaurentPoly pbw_scalar(const RepClass& m) const;
  /// Rewrites an element in the basis F_[X] (coefficient of F_[X] per X).
  HallElement to_pbw_coordinates(const HallElement& h) const;
  HallElement from_pbw_coordinates(const HallElement& h) const;

  /// F_[U]^k / [k]_q!, exact.
  HallElement divided_power(const PositiveRoot& r, int k);
  /// F_[U_beta_1]^(m_1) ... F_[U_beta_N]^(m_N).
  HallElement ordered_pbw_product(const RepClass& m, const DirectedOrder& order);

private:
  using CensusKey = std::tuple<int, RepClass, std::vector<long>>;
  using Census = std::map<std::pair<RepClass, RepClass>, std::uint64_t>;
  const Census& census(const RepClass& x, const std::vector<long>& dim_sub, int p);
  void check_budget(const RepClass& x, int p) const;

  RootSystem rs_;
  HallBudget budget_;
  mutable std::mutex mutex_;
  std::map<CensusKey, Census> census_;
  std::map<std::tuple<RepClass, RepClass, RepClass>, LaurentPoly> polys_;
  std::vector<HallPolynomialRecord> log_;
  std::map<std::pair<RepClass, RepClass>, HallElement> products_;
};

bool divided_power_check(HallAlgebra& hall, const RepClass& m, const DirectedOrder& order);

struct StraightenTerm {
  RepClass m;
  LaurentPoly coeff;  // coefficient of the ordered PBW monomial F^(m)
  long mu0_degree = 0;
  bool supported_between = false;
};

struct StraightenReport {
  int k = 0, l = 0;  // 0-based positions in the directed order, k < l
  PositiveRoot beta_k, beta_l;
  int pairing = 0;        // (beta_k, beta_l)
  LaurentPoly leading;    // coefficient of F_{beta_k} F_{beta_l} in F_{beta_l} F_{beta_k}
  std::vector<StraightenTerm> corrections;
  long mu0_bound = 0;     // mu0(beta_k) + mu0(beta_l)
  bool identity_holds = false;
  bool support_ok = false;
  bool degree_drop_ok = false;
  bool ok() const { return identity_holds && support_ok && degree_drop_ok; }
  /// `F_{l} F_{k} = q^.. F_{k} F_{l} + c F..`
  std::string identity(const RootSystem& rs, const DirectedOrder& order) const;
  /// The same relation solved for F_{k} F_{l}.
  std::string reversed_identity(const RootSystem& rs, const DirectedOrder& order) const;
};

StraightenReport straighten_check(HallAlgebra& hall, int k, int l, const DirectedOrder& order);

struct GradedPairResult {
  int k = 0, l = 0;
  bool leading_ok = false;  // leading coefficient is q^{(beta_k, beta_l)}
  bool drop_ok = false;     // every other term has smaller w-degree
  std::vector<RepClass> offending;
  bool ok() const { return leading_ok && drop_ok; }
};

/// Per-pair check, no admissibility precondition.
std::vector<GradedPairResult> graded_relation_report(HallAlgebra& hall, const DirectedOrder& order, const WeightFunction& w);
/// Throws DomainError unless w is strongly admissible.
bool graded_relation_check(HallAlgebra& hall, const DirectedOrder& order, const WeightFunction& w);

struct WeakScanReport {
  bool weak_ok = true;
  bool strict_ok = true;     // strict on every non-split triple
  bool normalized = true;    // w(M) = 0 only for M = 0
  long triples_checked = 0;
  std::vector<std::string> weak_witnesses;
  std::vector<std::string> strict_witnesses;
  bool ok(bool require_strict) const { return weak_ok && (!require_strict || strict_ok); }
};

/// All (M, N, X) with total dim X <= max_total_dim and a short exact sequence
/// 0 -> N -> X -> M -> 0 over GF(2).
WeakScanReport weak_admissibility_scan(HallAlgebra& hall, const WeightFunction& w, int max_total_dim);

/// Formats `coeff * u[{"i,j":k,...}]` lines; shared by the CLI.
std::string render_hall_element(const RootSystem& rs, const HallElement& h);
std::string exponent_json(const RootSystem& rs, const ExponentVector& s);

}  // namespace pbwff
