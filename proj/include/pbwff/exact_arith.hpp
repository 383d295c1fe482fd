// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace pbwff {

using BigInt = mpz_class;
/// Always canonical (lowest terms, positive denominator) after construction.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

/// Integer Laurent polynomial in q, stored sparsely as exponent -> coefficient.
/// No zero coefficient is ever stored; the empty map is 0.
class LaurentPoly {
public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<const int, long>> terms);

  static LaurentPoly monomial(int exponent, const BigInt& coeff = 1);
  static LaurentPoly q() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes q -> q^k (k may be negative).
  LaurentPoly substitute_power(int k) const;

  /// Canonical text form: decreasing exponents, e.g. `q^2 - q^-2`, `2q - 1`.
  std::string to_string() const;

private:
  void add_term(int exponent, const BigInt& coeff);
  Terms terms_;
};

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_neg(const LaurentPoly& a);

/// Exact evaluation; throws DomainError (zero-evaluation-point) for x == 0.
Rational laurent_eval(const LaurentPoly& a, const Rational& x);

/// Exact quotient a / b in Z[q, q^-1]; throws DomainError when b == 0 or
/// the division leaves a remainder.
LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b);

// Symmetric quantum numbers: [m]_q = (q^m - q^-m) / (q - q^-1).
LaurentPoly q_integer(unsigned m);
LaurentPoly q_factorial(unsigned m);
/// Pascal-type recurrence, division free. Throws DomainError for k > m.
LaurentPoly q_binomial(unsigned m, unsigned k);

}  // namespace pbwff
