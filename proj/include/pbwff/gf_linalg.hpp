// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace pbwff::gf {

bool is_prime(int p);

/// Dense matrix over GF(p), row-major, entries in [0, p).
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint32_t> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
  std::uint32_t& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  std::uint32_t operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  static Matrix identity(int d);
};

Matrix multiply(const Matrix& x, const Matrix& y, int p);
Matrix transpose(const Matrix& x);
/// Rows of x followed by rows of y (equal column counts).
Matrix stack(const Matrix& x, const Matrix& y);
int rank(Matrix m, int p);

/// A subspace of GF(p)^dim stored by its reduced row echelon basis.
struct Subspace {
  int dim = 0;          // ambient dimension
  Matrix basis;         // rows x dim, reduced row echelon form
  std::vector<int> pivots;
  int size() const { return basis.rows; }
};

/// Every subspace of GF(p)^dim of the given dimension; count is the Gaussian
/// binomial [dim choose k]_p.
std::vector<Subspace> all_subspaces(int dim, int k, int p);

/// v (length dim) lies in the span of s.
bool contains_vector(const Subspace& s, std::vector<std::uint32_t> v, int p);
/// Each row of the images matrix lies in s.
bool contains_rows(const Subspace& s, const Matrix& rows, int p);

}  // namespace pbwff::gf
