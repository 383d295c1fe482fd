// SPDX-License-Identifier: Apache-2.0
#include "pbwff/exact_arith.hpp"

#include "pbwff/error.hpp"

#include <vector>

namespace pbwff {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    BigInt mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly laurent_neg(const LaurentPoly& a) { return -a; }

Rational laurent_eval(const LaurentPoly& a, const Rational& at) {
  Rational x = at;
  x.canonicalize();
  if (x == 0) throw DomainError("zero-evaluation-point");
  Rational sum = 0;
  for (const auto& [e, c] : a.terms()) {
    Rational power = 1;
    Rational base = e >= 0 ? x : Rational(1) / x;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
    sum += Rational(c) * power;
  }
  return sum;
}

LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero Laurent polynomial");
  LaurentPoly rem = a;
  LaurentPoly quot;
  const int lead_b = b.max_exponent();
  const BigInt lead_c = b.coeff(lead_b);
  const int span_b = lead_b - b.min_exponent();
  while (!rem.is_zero()) {
    const int lead_r = rem.max_exponent();
    // Units of Z[q,q^-1] are +-q^k, so the remainder span must not shrink
    // below that of the divisor before it vanishes.
    if (lead_r - rem.min_exponent() < span_b) throw DomainError("inexact Laurent division");
    const BigInt c = rem.coeff(lead_r);
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) {
      throw DomainError("inexact Laurent division");
    }
    LaurentPoly t = LaurentPoly::monomial(lead_r - lead_b, c / lead_c);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

LaurentPoly q_integer(unsigned m) {
  LaurentPoly r;
  for (unsigned t = 0; t < m; ++t) r += LaurentPoly::monomial(static_cast<int>(m) - 1 - 2 * static_cast<int>(t));
  return r;
}

LaurentPoly q_factorial(unsigned m) {
  LaurentPoly r = 1;
  for (unsigned i = 2; i <= m; ++i) r *= q_integer(i);
  return r;
}

LaurentPoly q_binomial(unsigned m, unsigned k) {
  if (k > m) throw DomainError("q_binomial requires k <= m");
  // [m, k] = q^k [m-1, k] + q^(k-m) [m-1, k-1]
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (unsigned mm = 1; mm <= m; ++mm) {
    std::vector<LaurentPoly> next(mm + 1);
    for (unsigned kk = 0; kk <= mm; ++kk) {
      LaurentPoly v;
      if (kk < mm) v += row[kk].shifted(static_cast<int>(kk));
      if (kk > 0) v += row[kk - 1].shifted(static_cast<int>(kk) - static_cast<int>(mm));
      next[kk] = std::move(v);
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace pbwff
