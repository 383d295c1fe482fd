// SPDX-License-Identifier: Apache-2.0
#include "pbwff/gf_linalg.hpp"

#include <functional>

#include "pbwff/error.hpp"

namespace pbwff::gf {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, int p) {
  // p is a small prime: Fermat.
  std::uint64_t result = 1, base = a % static_cast<std::uint32_t>(p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % static_cast<std::uint64_t>(p);
    base = base * base % static_cast<std::uint64_t>(p);
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Matrix Matrix::identity(int d) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

Matrix multiply(const Matrix& x, const Matrix& y, int p) {
  if (x.cols != y.rows) throw DomainError("gf::multiply: shape mismatch");
  Matrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const std::uint32_t xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) = (z(i, j) + xik * y(k, j)) % static_cast<std::uint32_t>(p);
    }
  return z;
}

Matrix transpose(const Matrix& x) {
  Matrix t(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) t(j, i) = x(i, j);
  return t;
}

Matrix stack(const Matrix& x, const Matrix& y) {
  if (x.cols != y.cols && x.rows > 0 && y.rows > 0) throw DomainError("gf::stack: column mismatch");
  Matrix s(x.rows + y.rows, x.rows > 0 ? x.cols : y.cols);
  std::copy(x.a.begin(), x.a.end(), s.a.begin());
  std::copy(y.a.begin(), y.a.end(), s.a.begin() + static_cast<std::ptrdiff_t>(x.a.size()));
  return s;
}

int rank(Matrix m, int p) {
  const auto up = static_cast<std::uint32_t>(p);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    const std::uint32_t inv = inverse_mod(m(r, c), p);
    for (int j = 0; j < m.cols; ++j) m(r, j) = m(r, j) * inv % up;
    for (int i = r + 1; i < m.rows; ++i) {
      const std::uint32_t f = m(i, c);
      if (f == 0) continue;
      for (int j = 0; j < m.cols; ++j) m(i, j) = (m(i, j) + (up - f) * m(r, j)) % up;
    }
    ++r;
  }
  return r;
}

std::vector<Subspace> all_subspaces(int dim, int k, int p) {
  if (k < 0 || k > dim) return {};
  std::vector<Subspace> out;
  std::vector<int> pivots;
  // Choose pivot columns, then fill the free entries of each pivot row
  // (columns right of its pivot that are not pivot columns).
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pivots.size()) == k) {
      std::vector<std::pair<int, int>> free;
      std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
      for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < dim; ++c)
          if (!is_pivot[static_cast<std::size_t>(c)]) free.emplace_back(r, c);
      Matrix base(k, dim);
      for (int r = 0; r < k; ++r) base(r, pivots[static_cast<std::size_t>(r)]) = 1;
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        Matrix m = base;
        for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = digits[f];
        out.push_back(Subspace{dim, std::move(m), pivots});
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == static_cast<std::uint32_t>(p)) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
      return;
    }
    for (int c = start; c < dim; ++c) {
      pivots.push_back(c);
      choose(c + 1);
      pivots.pop_back();
    }
  };
  choose(0);
  return out;
}

bool contains_vector(const Subspace& s, std::vector<std::uint32_t> v, int p) {
  const auto up = static_cast<std::uint32_t>(p);
  for (int r = 0; r < s.size(); ++r) {
    const int c = s.pivots[static_cast<std::size_t>(r)];
    const std::uint32_t f = v[static_cast<std::size_t>(c)];
    if (f == 0) continue;
    for (int j = 0; j < s.dim; ++j) v[static_cast<std::size_t>(j)] = (v[static_cast<std::size_t>(j)] + (up - f) * s.basis(r, j)) % up;
  }
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

bool contains_rows(const Subspace& s, const Matrix& rows, int p) {
  for (int r = 0; r < rows.rows; ++r) {
    std::vector<std::uint32_t> v(rows.a.begin() + static_cast<std::ptrdiff_t>(r) * rows.cols,
                                 rows.a.begin() + static_cast<std::ptrdiff_t>(r + 1) * rows.cols);
    if (!contains_vector(s, std::move(v), p)) return false;
  }
  return true;
}

}  // namespace pbwff::gf
