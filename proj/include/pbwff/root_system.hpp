// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pbwff/exact_arith.hpp"

namespace pbwff {

/// Largest supported rank n (Lie algebra sl_{n+1}).
inline constexpr int kMaxRank = 8;

/// Throws DomainError unless 1 <= n <= kMaxRank.
void validate_rank(int n);

/// alpha_{i,j} = alpha_i + ... + alpha_j, 1 <= i <= j <= n. Also names the
/// interval module M_{i,j} of the equioriented quiver.
struct PositiveRoot {
  int i = 1;
  int j = 1;
  bool is_simple() const { return i == j; }
  int height() const { return j - i + 1; }
  friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

std::string to_string(const PositiveRoot& r);  // "i,j"

/// Dominant weight in fundamental-weight coordinates.
struct Weight {
  std::vector<int> m;
  int rank() const { return static_cast<int>(m.size()); }
  int height() const;  // sum of coordinates
  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight fundamental_weight(int n, int k);
/// Parses "1,0,2"; throws DomainError on malformed or negative entries.
Weight parse_weight(std::string_view text);
std::string to_string(const Weight& w);
/// All dominant weights of rank n with |lambda| == height, lexicographic.
std::vector<Weight> dominant_weights_of_height(int n, int height);

/// Element of the root lattice in simple-root coordinates.
struct RootVector {
  std::vector<long> c;
  friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// Canonical root order (lexicographic in (i,j)) with O(1) index lookup.
class RootSystem {
public:
  explicit RootSystem(int n);

  int rank() const { return n_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<PositiveRoot>& roots() const { return roots_; }
  const PositiveRoot& root(int index) const { return roots_.at(static_cast<std::size_t>(index)); }
  /// Throws DomainError if the root does not belong to this rank.
  int index(const PositiveRoot& r) const;
  int index(int i, int j) const { return index(PositiveRoot{i, j}); }
  bool contains(const PositiveRoot& r) const { return r.i >= 1 && r.i <= r.j && r.j <= n_; }

private:
  int n_;
  std::vector<PositiveRoot> roots_;
};

std::vector<PositiveRoot> positive_roots(int n);

/// Symmetrized Cartan form, (alpha_i, alpha_j) = 2, -1 or 0.
int root_pairing(int n, const PositiveRoot& a, const PositiveRoot& b);

/// dim V(lambda) by the Weyl dimension formula.
BigInt weyl_dim(const Weight& lambda);

/// Fundamental-weight to simple-root coordinates (exact, possibly fractional).
std::vector<Rational> weight_in_root_coordinates(const Weight& lambda);
/// lambda - w0(lambda) in simple-root coordinates.
RootVector weight_minus_roots_bound(const Weight& lambda);
/// The dominant weight -w0(lambda): coordinates reversed.
Weight dual_weight(const Weight& lambda);

/// Multiplicities of positive roots, dense over RootSystem's canonical order.
/// Serves as a lattice point of P(lambda), a PBW exponent, and a quiver
/// representation class.
struct ExponentVector {
  std::vector<int> s;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t size) : s(size, 0) {}
  explicit ExponentVector(std::vector<int> values) : s(std::move(values)) {}
  static ExponentVector unit(const RootSystem& rs, const PositiveRoot& r);

  std::size_t size() const { return s.size(); }
  int operator[](std::size_t k) const { return s[k]; }
  int& operator[](std::size_t k) { return s[k]; }
  bool is_zero() const;
  long total() const;  // sum of entries
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
/// Componentwise a <= b (divisibility of monomials).
bool divides(const ExponentVector& a, const ExponentVector& b);
/// sum_alpha s(alpha) * alpha in simple-root coordinates.
RootVector root_sum(const RootSystem& rs, const ExponentVector& s);
/// Human form `f_{1,2}^2 f_{2,3}`, `1` for the zero vector.
std::string monomial_string(const RootSystem& rs, const ExponentVector& s);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

}  // namespace pbwff
