// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbwff/root_system.hpp"
#include "pbwff/weight_function.hpp"

// Representation theory of the equioriented quiver 1 -> 2 -> ... -> n.
// Indecomposables are the interval modules M_{i,j}; a representation class
// is an ExponentVector of multiplicities. Projectives are M_{i,n}, injectives
// M_{1,j}, and M_{n,n} is the simple projective.

namespace pbwff {

using Indecomposable = PositiveRoot;
using RepClass = ExponentVector;

struct DimVector {
  std::vector<long> d;
  friend bool operator==(const DimVector&, const DimVector&) = default;
};

DimVector dim_vector(const RootSystem& rs, const RepClass& m);
DimVector dim_vector(int n, const Indecomposable& u);
long total_dim(const DimVector& d);

bool is_projective(int n, const Indecomposable& u);
bool is_injective(const Indecomposable& u);

/// dim Hom(M_{r,s}, M_{i,j}) = 1 iff i <= r <= j <= s.
int hom_dim(int n, const Indecomposable& from, const Indecomposable& to);
long hom_dim_reps(const RootSystem& rs, const RepClass& from, const RepClass& to);
long ext_dim_reps(const RootSystem& rs, const RepClass& from, const RepClass& to);

/// <d, e> = sum_i d_i e_i - sum_i d_i e_{i+1}.
long euler_form(const DimVector& d, const DimVector& e);

/// dim Hom(V_0, M), V_0 the sum of all indecomposables.
long mu0(const RootSystem& rs, const RepClass& m);

std::optional<Indecomposable> ar_translate(int n, const Indecomposable& u);
std::optional<Indecomposable> ar_cotranslate(int n, const Indecomposable& u);

/// 0 -> left -> middle -> right -> 0, almost split.
struct ARSequence {
  Indecomposable left;
  RepClass middle;
  Indecomposable right;
};

/// Throws DomainError for projective input.
ARSequence ar_sequence(int n, const Indecomposable& u);

/// Topological order of the nonzero-Hom relation, ties broken by (i,j).
std::vector<PositiveRoot> representation_directed_order(int n);
/// Hom(U_k, U_l) = 0 for k > l and Ext^1(U_k, U_l) = 0 for k <= l.
bool is_representation_directed(int n, const std::vector<PositiveRoot>& order);

/// Coefficients a (canonical root order) with w = sum_V a_V dim Hom(V, -).
std::vector<long> decompose_weight_function(const WeightFunction& w);
/// w = sum_V a_V dim Hom(V, -), evaluated on indecomposables.
WeightFunction compose_weight_function(int n, const std::vector<long>& coefficients);
/// w_V = dim Hom(V, -) for an arbitrary representation V.
WeightFunction hom_weight_function(const RootSystem& rs, const RepClass& v);

enum class Admissibility { Strong, Admissible, NotAdmissible };
std::string to_string(Admissibility a);

struct Classification {
  Admissibility kind = Admissibility::NotAdmissible;
  std::vector<long> coefficients;
};

Classification classify_weight_function(const WeightFunction& w);

/// m <= m' in the degeneration order: dim Hom(V, m) <= dim Hom(V, m') for all
/// indecomposables V. Throws DomainError when dimension vectors differ.
bool degeneration_leq(const RootSystem& rs, const RepClass& m, const RepClass& mprime);

/// Every rep class of the given dimension vector, lexicographic.
std::vector<RepClass> rep_classes_of_dim(const RootSystem& rs, const DimVector& d);

}  // namespace pbwff
