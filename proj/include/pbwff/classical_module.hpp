// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pbwff/exact_arith.hpp"
#include "pbwff/hall_algebra.hpp"
#include "pbwff/root_system.hpp"
#include "pbwff/weight_function.hpp"

// V(lambda) realized as the cyclic span of v_lambda inside
// V(w_1)^{m_1} (x) ... (x) V(w_n)^{m_n}, with V(w_k) = Lambda^k C^{n+1}.
// f_{i,j} acts on C^{n+1} as the matrix unit w_i -> w_{j+1}.

namespace pbwff {

/// w_{i_1} ^ ... ^ w_{i_k}, 1 <= i_1 < ... < i_k <= n+1.
struct WedgeBasisIndex {
  std::vector<int> indices;
  int k() const { return static_cast<int>(indices.size()); }
  friend auto operator<=>(const WedgeBasisIndex&, const WedgeBasisIndex&) = default;
};

/// Throws DomainError unless strictly increasing within 1..n+1.
void validate_wedge(const WedgeBasisIndex& idx, int n);

/// Pure tensor of wedges; each factor is stored as a bitmask (bit t-1 set
/// iff w_t occurs). Ordered lexicographically on the index tuples.
struct TensorBasisIndex {
  std::vector<std::uint16_t> factors;

  WedgeBasisIndex factor(std::size_t k) const;
  friend bool operator==(const TensorBasisIndex&, const TensorBasisIndex&) = default;
  friend bool operator<(const TensorBasisIndex& a, const TensorBasisIndex& b);
};

struct ModuleVector {
  std::map<TensorBasisIndex, Rational> entries;

  bool is_zero() const { return entries.empty(); }
  void add(const TensorBasisIndex& key, const Rational& c);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

ModuleVector basis_vector(const std::vector<WedgeBasisIndex>& factors);

/// Factor sizes of the tensor model: w_1 m_1 times, then w_2 m_2 times, ...
std::vector<int> tensor_shape(const Weight& lambda);

/// Derivation on wedges, coproduct on tensors.
ModuleVector root_vector_action(int n, const PositiveRoot& alpha, const ModuleVector& v);

/// w_1 ^ ... ^ w_k in every factor.
ModuleVector highest_weight_vector(const Weight& lambda);
ModuleVector highest_weight_vector(const std::vector<int>& shape);

/// f^s v with f_{beta_N}^{s_N} applied first (order is any permutation).
ModuleVector monomial_action(int n, const ExponentVector& s, const ModuleVector& v, const DirectedOrder& order);

/// Exact row echelon form over Q; the pivot of a row is its smallest key.
class RationalEchelon {
public:
  /// Adds v if independent of the rows; returns whether it was added.
  bool insert(const ModuleVector& v);
  ModuleVector reduce(ModuleVector v) const;
  bool contains(const ModuleVector& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return rows_.size(); }

private:
  std::map<TensorBasisIndex, ModuleVector> rows_;
};

inline constexpr std::int64_t kDefaultMaxModuleDim = 3000;
inline constexpr std::int64_t kDefaultMaxMonomials = 2'000'000;

struct ModuleBudget {
  std::int64_t max_module_dim = kDefaultMaxModuleDim;
  std::int64_t max_monomials = kDefaultMaxMonomials;
};

/// Every nonzero f^s v_lambda with s inside the weight bound
/// lambda - w0(lambda); zero images are omitted.
std::map<ExponentVector, ModuleVector> monomial_images(const Weight& lambda, const DirectedOrder& order,
                                                        const ModuleBudget& budget = {});

/// Echelon basis of F_d V(lambda) = span{f^s v_lambda : deg(s) <= d}.
RationalEchelon filtration_space(const Weight& lambda, long d, const WeightFunction& w, const ModuleBudget& budget = {});

struct GradedReport {
  Weight lambda;
  std::vector<PositiveRoot> order;
  std::map<long, long> degree_dims;  // d -> dim F_d / F_{d-1}
  long module_dim = 0;
  long lattice_points = 0;
  bool basis_ok = false;
  bool monomial_ideal_ok = false;
  std::vector<ExponentVector> violations;  // s outside S(lambda) with f^s v not in F_{deg s - 1}
  std::vector<ExponentVector> dependent;   // s in S(lambda) breaking the compatible basis
};

GradedReport graded_report(const Weight& lambda, const WeightFunction& w, const ModuleBudget& budget = {});
bool verify_basis(const Weight& lambda, const WeightFunction& w, const ModuleBudget& budget = {});
GradedReport verify_monomial_ideal(const Weight& lambda, const WeightFunction& w, const ModuleBudget& budget = {});

/// Minimal exponent vectors (under divisibility) outside S(lambda).
std::vector<ExponentVector> ideal_generators(const Weight& lambda);

/// Monomial producing +-w_{i_1}^...^w_{i_k} from w_1^...^w_k with minimal
/// ff degree.
ExponentVector fundamental_basis_formula(int n, const WedgeBasisIndex& idx);

/// {f^s (v_lambda (x) v_mu) : s in S(lambda) + S(mu)} is independent of size
/// dim V(lambda + mu).
bool cartan_component_check(const Weight& lambda, const Weight& mu, const ModuleBudget& budget = {});

/// For each weight lambda - nu (nu in root coordinates): number of points of
/// S(lambda) versus the dimension of the weight space spanned by images.
struct WeightMultiplicity {
  RootVector nu;
  long lattice_count = 0;
  long weight_space_dim = 0;
};
std::vector<WeightMultiplicity> weight_multiplicities(const Weight& lambda, const ModuleBudget& budget = {});

}  // namespace pbwff
