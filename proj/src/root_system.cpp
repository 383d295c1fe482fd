// SPDX-License-Identifier: Apache-2.0
#include "pbwff/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "pbwff/error.hpp"

namespace pbwff {

void validate_rank(int n) {
  if (n < 1 || n > kMaxRank) {
    throw DomainError("rank must satisfy 1 <= n <= " + std::to_string(kMaxRank) + ", got " + std::to_string(n));
  }
}

std::string to_string(const PositiveRoot& r) { return std::to_string(r.i) + "," + std::to_string(r.j); }

int Weight::height() const { return std::accumulate(m.begin(), m.end(), 0); }

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw DomainError("weights of different rank");
  Weight r = a;
  for (std::size_t k = 0; k < r.m.size(); ++k) r.m[k] += b.m[k];
  return r;
}

Weight fundamental_weight(int n, int k) {
  validate_rank(n);
  if (k < 1 || k > n) throw DomainError("fundamental weight index out of range");
  Weight w{std::vector<int>(static_cast<std::size_t>(n), 0)};
  w.m[static_cast<std::size_t>(k - 1)] = 1;
  return w;
}

Weight parse_weight(std::string_view text) {
  Weight w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw DomainError("malformed weight '" + std::string(text) + "'");
    }
    if (value < 0) throw DomainError("weight coordinates must be nonnegative");
    w.m.push_back(value);
    pos = comma + 1;
  }
  validate_rank(w.rank());
  return w;
}

std::string to_string(const Weight& w) {
  std::string out;
  for (std::size_t k = 0; k < w.m.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(w.m[k]);
  }
  return out;
}

std::vector<Weight> dominant_weights_of_height(int n, int height) {
  validate_rank(n);
  std::vector<Weight> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(Weight{cur});
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, height);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return a.m < b.m; });
  return out;
}

RootSystem::RootSystem(int n) : n_(n) {
  validate_rank(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) roots_.push_back({i, j});
}

int RootSystem::index(const PositiveRoot& r) const {
  if (!contains(r)) throw DomainError("root " + to_string(r) + " not in rank " + std::to_string(n_));
  // Roots with first index a < i occupy (n - a + 1) slots each.
  const int before = (r.i - 1) * n_ - (r.i - 1) * (r.i - 2) / 2;
  return before + (r.j - r.i);
}

std::vector<PositiveRoot> positive_roots(int n) { return RootSystem(n).roots(); }

int root_pairing(int n, const PositiveRoot& a, const PositiveRoot& b) {
  validate_rank(n);
  RootSystem rs(n);
  if (!rs.contains(a) || !rs.contains(b)) throw DomainError("root pairing: rank mismatch");
  int total = 0;
  for (int x = a.i; x <= a.j; ++x) {
    for (int y = b.i; y <= b.j; ++y) {
      if (x == y) total += 2;
      else if (x - y == 1 || y - x == 1) total -= 1;
    }
  }
  return total;
}

BigInt weyl_dim(const Weight& lambda) {
  const int n = lambda.rank();
  validate_rank(n);
  Rational prod = 1;
  for (int i = 1; i <= n; ++i) {
    long sum = 0;
    for (int j = i; j <= n; ++j) {
      sum += lambda.m[static_cast<std::size_t>(j - 1)] + 1;
      prod *= Rational(sum, j - i + 1);
    }
  }
  prod.canonicalize();
  return prod.get_num();
}

std::vector<Rational> weight_in_root_coordinates(const Weight& lambda) {
  const int n = lambda.rank();
  validate_rank(n);
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  // Inverse Cartan matrix of A_n: min(k,i) (n+1-max(k,i)) / (n+1).
  for (int k = 1; k <= n; ++k) {
    const int mk = lambda.m[static_cast<std::size_t>(k - 1)];
    if (mk == 0) continue;
    for (int i = 1; i <= n; ++i) {
      Rational entry(std::min(k, i) * (n + 1 - std::max(k, i)), n + 1);
      entry.canonicalize();
      c[static_cast<std::size_t>(i - 1)] += entry * mk;
    }
  }
  return c;
}

Weight dual_weight(const Weight& lambda) {
  Weight d = lambda;
  std::reverse(d.m.begin(), d.m.end());
  return d;
}

RootVector weight_minus_roots_bound(const Weight& lambda) {
  auto coords = weight_in_root_coordinates(lambda + dual_weight(lambda));
  RootVector out;
  for (auto& c : coords) {
    if (c.get_den() != 1) throw VerificationFailure("lambda - w0 lambda is not in the root lattice");
    out.c.push_back(c.get_num().get_si());
  }
  return out;
}

ExponentVector ExponentVector::unit(const RootSystem& rs, const PositiveRoot& r) {
  ExponentVector v(static_cast<std::size_t>(rs.size()));
  v[static_cast<std::size_t>(rs.index(r))] = 1;
  return v;
}

bool ExponentVector::is_zero() const {
  return std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
}

long ExponentVector::total() const { return std::accumulate(s.begin(), s.end(), 0L); }

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DomainError("exponent vectors of different rank");
  ExponentVector r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

RootVector root_sum(const RootSystem& rs, const ExponentVector& s) {
  RootVector out{std::vector<long>(static_cast<std::size_t>(rs.rank()), 0)};
  for (int k = 0; k < rs.size(); ++k) {
    const int mult = s[static_cast<std::size_t>(k)];
    if (mult == 0) continue;
    const auto& r = rs.root(k);
    for (int t = r.i; t <= r.j; ++t) out.c[static_cast<std::size_t>(t - 1)] += mult;
  }
  return out;
}

std::string monomial_string(const RootSystem& rs, const ExponentVector& s) {
  std::string out;
  for (int k = 0; k < rs.size(); ++k) {
    const int e = s[static_cast<std::size_t>(k)];
    if (e == 0) continue;
    if (!out.empty()) out += " ";
    out += "f_{" + to_string(rs.root(k)) + "}";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : v.s) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace pbwff
