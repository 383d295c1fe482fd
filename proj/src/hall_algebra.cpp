// SPDX-License-Identifier: Apache-2.0
#include "pbwff/hall_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pbwff/error.hpp"

namespace pbwff {

namespace {

constexpr int kMaxPrime = 13;

std::size_t sz(long v) { return static_cast<std::size_t>(v); }

// Transposed composite maps of the representation: ct[i][j] has shape
// dims[i] x dims[j] and sends row vectors at vertex i to vertex j.
std::vector<std::vector<gf::Matrix>> transposed_composites(const FiniteFieldRep& rep) {
  const int n = rep.rank();
  std::vector<std::vector<gf::Matrix>> ct(sz(n), std::vector<gf::Matrix>(sz(n)));
  for (int i = 0; i < n; ++i) {
    ct[sz(i)][sz(i)] = gf::Matrix::identity(static_cast<int>(rep.dims.d[sz(i)]));
    for (int j = i + 1; j < n; ++j)
      ct[sz(i)][sz(j)] = gf::multiply(ct[sz(i)][sz(j - 1)], gf::transpose(rep.maps[sz(j - 1)]), rep.p);
  }
  return ct;
}

std::vector<std::vector<long>> empty_profile(int n) {
  return std::vector<std::vector<long>>(sz(n + 2), std::vector<long>(sz(n + 2), 0));
}

std::string compact_root(const PositiveRoot& r) {
  std::string s = "F_{";
  for (int t = r.i; t <= r.j; ++t) s += std::to_string(t);
  return s + "}";
}

std::string ordered_monomial(const RootSystem& rs, const RepClass& m, const DirectedOrder& order, bool reversed) {
  std::vector<PositiveRoot> seq = order.order;
  if (reversed) std::reverse(seq.begin(), seq.end());
  std::string s;
  for (const auto& r : seq) {
    const int k = m[sz(rs.index(r))];
    if (k == 0) continue;
    s += compact_root(r);
    if (k > 1) s += "^(" + std::to_string(k) + ")";
  }
  return s.empty() ? "1" : s;
}

// "+ c X" / "- c X" fragment; first term drops the leading "+ ".
std::string signed_term(const LaurentPoly& c, const std::string& mono, bool first) {
  std::string sign, body;
  if (c.terms().size() == 1) {
    const auto& [e, v] = *c.terms().begin();
    sign = v < 0 ? "-" : "+";
    const LaurentPoly mag = LaurentPoly::monomial(e, abs(v));
    body = mag == LaurentPoly(1) ? "" : mag.to_string();
  } else {
    const bool neg = c.terms().rbegin()->second < 0;
    sign = neg ? "-" : "+";
    body = "(" + (neg ? -c : c).to_string() + ")";
  }
  if (body.empty() && mono == "1") body = "1";
  const std::string tail = body + (mono == "1" ? "" : mono);
  if (first) return (sign == "-" ? "-" : "") + tail;
  return " " + sign + " " + tail;
}

// Coefficients (constant term first) of the interpolating polynomial.
std::vector<Rational> interpolate(const std::vector<int>& xs, const std::vector<BigInt>& ys) {
  const std::size_t k = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  // Horner on the Newton form.
  std::vector<Rational> poly{dd[k - 1]};
  for (std::size_t idx = k - 1; idx-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t t = 0; t < poly.size(); ++t) {
      next[t + 1] += poly[t];
      next[t] -= poly[t] * xs[idx];
    }
    next[0] += dd[idx];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

void FiniteFieldRep::validate() const {
  if (!gf::is_prime(p) || p > kMaxPrime) throw DomainError("field size must be a prime <= 13");
  const int n = rank();
  validate_rank(n);
  if (static_cast<int>(maps.size()) != n - 1) throw DomainError("one matrix per arrow expected");
  for (int k = 0; k + 1 < n; ++k) {
    const auto& a = maps[sz(k)];
    if (a.rows != dims.d[sz(k + 1)] || a.cols != dims.d[sz(k)]) throw DomainError("arrow matrix shape does not match dims");
    for (auto x : a.a)
      if (x >= static_cast<std::uint32_t>(p)) throw DomainError("matrix entry out of range");
  }
  for (long d : dims.d)
    if (d < 0) throw DomainError("negative dimension");
}

FiniteFieldRep model_rep(const RootSystem& rs, const RepClass& x, int p) {
  FiniteFieldRep rep;
  rep.p = p;
  rep.dims = dim_vector(rs, x);
  const int n = rs.rank();
  // Basis at vertex t: one vector per interval copy covering t, in root order.
  std::vector<std::vector<int>> slots(sz(n));
  for (int k = 0; k < rs.size(); ++k)
    for (int c = 0; c < x[sz(k)]; ++c)
      for (int t = rs.root(k).i; t <= rs.root(k).j; ++t) slots[sz(t - 1)].push_back(k * 64 + c);
  for (int t = 0; t + 1 < n; ++t) {
    gf::Matrix a(static_cast<int>(slots[sz(t + 1)].size()), static_cast<int>(slots[sz(t)].size()));
    for (std::size_t c = 0; c < slots[sz(t)].size(); ++c) {
      const auto it = std::find(slots[sz(t + 1)].begin(), slots[sz(t + 1)].end(), slots[sz(t)][c]);
      if (it != slots[sz(t + 1)].end()) a(static_cast<int>(it - slots[sz(t + 1)].begin()), static_cast<int>(c)) = 1;
    }
    rep.maps.push_back(std::move(a));
  }
  return rep;
}

RepClass class_from_rank_profile(const RootSystem& rs, const std::vector<std::vector<long>>& r) {
  const int n = rs.rank();
  auto at = [&](int i, int j) -> long {
    if (i < 1 || j > n || i > j) return 0;
    return r[sz(i)][sz(j)];
  };
  RepClass m(sz(rs.size()));
  for (int k = 0; k < rs.size(); ++k) {
    const auto& b = rs.root(k);
    const long v = at(b.i, b.j) - at(b.i - 1, b.j) - at(b.i, b.j + 1) + at(b.i - 1, b.j + 1);
    if (v < 0) throw VerificationFailure("rank profile gives a negative multiplicity");
    m[sz(k)] = static_cast<int>(v);
  }
  return m;
}

RepClass classify_rep(const FiniteFieldRep& rep) {
  rep.validate();
  const RootSystem rs(rep.rank());
  const auto ct = transposed_composites(rep);
  auto r = empty_profile(rep.rank());
  for (int i = 1; i <= rep.rank(); ++i)
    for (int j = i; j <= rep.rank(); ++j) r[sz(i)][sz(j)] = gf::rank(ct[sz(i - 1)][sz(j - 1)], rep.p);
  return class_from_rank_profile(rs, r);
}

int DirectedOrder::position(const PositiveRoot& r) const {
  const auto it = std::find(order.begin(), order.end(), r);
  if (it == order.end()) throw DomainError("root " + to_string(r) + " not in order");
  return static_cast<int>(it - order.begin());
}

DirectedOrder directed_enumeration(int n) {
  DirectedOrder d{n, representation_directed_order(n)};
  if (!is_representation_directed(n, d.order)) throw VerificationFailure("enumeration is not representation-directed");
  return d;
}

HallElement HallElement::basis(const RepClass& m, const LaurentPoly& c) {
  HallElement h;
  h.add(m, c);
  return h;
}

LaurentPoly HallElement::coeff(const RepClass& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HallElement::add(const RepClass& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HallElement& HallElement::operator+=(const HallElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

HallElement& HallElement::operator-=(const HallElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

HallElement HallElement::scaled(const LaurentPoly& c) const {
  HallElement h;
  for (const auto& [m, v] : terms_) h.add(m, v * c);
  return h;
}

HallAlgebra::HallAlgebra(int n, HallBudget budget) : rs_(n), budget_(std::move(budget)) {
  if (budget_.primes.size() < 2) throw DomainError("at least two primes are needed");
  for (int p : budget_.primes)
    if (!gf::is_prime(p) || p > kMaxPrime) throw DomainError("primes must be <= 13");
  if (budget_.max_total_dim < 0) throw DomainError("max_total_dim must be nonnegative");
}

void HallAlgebra::check_budget(const RepClass& x, int p) const {
  if (static_cast<int>(x.size()) != rs_.size()) throw DomainError("rep class has wrong length");
  if (!gf::is_prime(p) || p > kMaxPrime) throw DomainError("field size must be a prime <= 13");
  if (total_dim(dim_vector(rs_, x)) > budget_.max_total_dim)
    throw BudgetExceeded("total dimension " + std::to_string(total_dim(dim_vector(rs_, x))) + " exceeds budget " +
                         std::to_string(budget_.max_total_dim));
}

const HallAlgebra::Census& HallAlgebra::census(const RepClass& x, const std::vector<long>& dim_sub, int p) {
  CensusKey key{p, x, dim_sub};
  {
    std::lock_guard lock(mutex_);
    const auto it = census_.find(key);
    if (it != census_.end()) return it->second;
  }
  check_budget(x, p);
  const int n = rs_.rank();
  const FiniteFieldRep rep = model_rep(rs_, x, p);
  const auto ct = transposed_composites(rep);
  std::vector<std::vector<gf::Subspace>> candidates(sz(n));
  for (int t = 0; t < n; ++t)
    candidates[sz(t)] = gf::all_subspaces(static_cast<int>(rep.dims.d[sz(t)]), static_cast<int>(dim_sub[sz(t)]), p);

  Census result;
  std::vector<const gf::Subspace*> chosen(sz(n), nullptr);
  std::function<void(int)> rec = [&](int t) {
    if (t == n) {
      auto ru = empty_profile(n);
      auto rq = empty_profile(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const auto& cij = ct[sz(i)][sz(j)];
          const auto& bi = chosen[sz(i)]->basis;
          const auto& bj = chosen[sz(j)]->basis;
          ru[sz(i + 1)][sz(j + 1)] = gf::rank(gf::multiply(bi, cij, p), p);
          rq[sz(i + 1)][sz(j + 1)] = gf::rank(gf::stack(cij, bj), p) - bj.rows;
        }
      ++result[{class_from_rank_profile(rs_, ru), class_from_rank_profile(rs_, rq)}];
      return;
    }
    for (const auto& s : candidates[sz(t)]) {
      if (t > 0 && chosen[sz(t - 1)]->size() > 0) {
        const gf::Matrix image = gf::multiply(chosen[sz(t - 1)]->basis, gf::transpose(rep.maps[sz(t - 1)]), p);
        if (!gf::contains_rows(s, image, p)) continue;
      }
      chosen[sz(t)] = &s;
      rec(t + 1);
    }
  };
  bool possible = true;
  for (int t = 0; t < n; ++t)
    if (candidates[sz(t)].empty()) possible = false;
  if (possible) rec(0);

  std::lock_guard lock(mutex_);
  return census_.try_emplace(std::move(key), std::move(result)).first->second;
}

std::vector<std::pair<RepClass, RepClass>> HallAlgebra::extension_pairs(const RepClass& x, const std::vector<long>& dim_sub, int p) {
  check_budget(x, p);
  const DimVector dx = dim_vector(rs_, x);
  if (dim_sub.size() != dx.d.size()) throw DomainError("dimension vector has wrong length");
  for (std::size_t t = 0; t < dx.d.size(); ++t)
    if (dim_sub[t] < 0 || dim_sub[t] > dx.d[t]) return {};
  std::vector<std::pair<RepClass, RepClass>> out;
  for (const auto& [nm, count] : census(x, dim_sub, p))
    if (count > 0) out.push_back(nm);
  return out;
}

BigInt HallAlgebra::subrep_count(const RepClass& x, const RepClass& n, const RepClass& m, int p) {
  check_budget(x, p);
  if (static_cast<int>(n.size()) != rs_.size() || static_cast<int>(m.size()) != rs_.size())
    throw DomainError("rep class has wrong length");
  const DimVector dx = dim_vector(rs_, x), dn = dim_vector(rs_, n), dm = dim_vector(rs_, m);
  for (std::size_t t = 0; t < dx.d.size(); ++t)
    if (dn.d[t] + dm.d[t] != dx.d[t]) return 0;
  const auto& c = census(x, dn.d, p);
  const auto it = c.find({n, m});
  return it == c.end() ? BigInt(0) : BigInt(static_cast<unsigned long>(it->second));
}

LaurentPoly HallAlgebra::hall_polynomial(const RepClass& m, const RepClass& n, const RepClass& x) {
  const auto key = std::make_tuple(m, n, x);
  {
    std::lock_guard lock(mutex_);
    const auto it = polys_.find(key);
    if (it != polys_.end()) return it->second;
  }
  check_budget(x, budget_.primes.front());
  const DimVector dx = dim_vector(rs_, x), dn = dim_vector(rs_, n), dm = dim_vector(rs_, m);
  for (std::size_t t = 0; t < dx.d.size(); ++t)
    if (dn.d[t] + dm.d[t] != dx.d[t]) return LaurentPoly();

  const int max_degree = static_cast<int>(budget_.primes.size()) - 2;
  std::vector<int> degrees;
  for (int d = static_cast<int>(ext_dim_reps(rs_, n, m)) + 1; d < max_degree; d += 2) degrees.push_back(d);
  if (degrees.empty() || degrees.back() != max_degree) degrees.push_back(max_degree);

  for (int d : degrees) {
    std::vector<int> xs(budget_.primes.begin(), budget_.primes.begin() + d + 1);
    std::vector<BigInt> ys;
    for (int p : xs) ys.push_back(subrep_count(x, n, m, p));
    const auto coeffs = interpolate(xs, ys);
    LaurentPoly poly;
    bool integral = true;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      if (coeffs[e].get_den() != 1) {
        integral = false;
        break;
      }
      poly += LaurentPoly::monomial(static_cast<int>(e), coeffs[e].get_num());
    }
    if (!integral) continue;
    const int held_out = budget_.primes[sz(d + 1)];
    const BigInt actual = subrep_count(x, n, m, held_out);
    if (laurent_eval(poly, Rational(held_out)) != Rational(actual)) continue;

    HallPolynomialRecord rec{m, n, x, poly, d, xs, held_out, actual};
    std::lock_guard lock(mutex_);
    const auto [it, fresh] = polys_.try_emplace(key, poly);
    if (fresh) log_.push_back(std::move(rec));
    return it->second;
  }
  throw VerificationFailure("Hall polynomial not determined within degree " + std::to_string(max_degree));
}

std::vector<HallPolynomialRecord> HallAlgebra::polynomial_log() const {
  std::lock_guard lock(mutex_);
  return log_;
}

HallElement HallAlgebra::basis_product(const RepClass& m, const RepClass& n) {
  const auto key = std::make_pair(m, n);
  {
    std::lock_guard lock(mutex_);
    const auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  const DimVector dm = dim_vector(rs_, m), dn = dim_vector(rs_, n);
  DimVector dx = dm;
  for (std::size_t t = 0; t < dx.d.size(); ++t) dx.d[t] += dn.d[t];
  const auto twist = LaurentPoly::monomial(static_cast<int>(euler_form(dm, dn)));
  HallElement h;
  for (const auto& x : rep_classes_of_dim(rs_, dx)) {
    const LaurentPoly f_u = hall_polynomial(m, n, x);
    const LaurentPoly f_q = f_u.substitute_power(2);  // u -> q^2
    h.add(x, twist * f_q);
  }
  std::lock_guard lock(mutex_);
  return products_.try_emplace(key, std::move(h)).first->second;
}

HallElement HallAlgebra::mult(const HallElement& a, const HallElement& b) {
  HallElement out;
  for (const auto& [m, cm] : a.terms())
    for (const auto& [n, cn] : b.terms()) out += basis_product(m, n).scaled(cm * cn);
  return out;
}

HallElement HallAlgebra::unit() const { return HallElement::basis(RepClass(sz(rs_.size()))); }

LaurentPoly HallAlgebra::pbw_scalar(const RepClass& m) const {
  return LaurentPoly::monomial(static_cast<int>(hom_dim_reps(rs_, m, m) - total_dim(dim_vector(rs_, m))));
}

HallElement HallAlgebra::pbw_element(const RepClass& m) const { return HallElement::basis(m, pbw_scalar(m)); }

HallElement HallAlgebra::to_pbw_coordinates(const HallElement& h) const {
  HallElement out;
  for (const auto& [m, c] : h.terms()) out.add(m, c.shifted(-pbw_scalar(m).min_exponent()));
  return out;
}

HallElement HallAlgebra::from_pbw_coordinates(const HallElement& h) const {
  HallElement out;
  for (const auto& [m, c] : h.terms()) out.add(m, c * pbw_scalar(m));
  return out;
}

HallElement HallAlgebra::divided_power(const PositiveRoot& r, int k) {
  if (k < 0) throw DomainError("negative divided power");
  const HallElement f = pbw_element(ExponentVector::unit(rs_, r));
  HallElement power = unit();
  for (int t = 0; t < k; ++t) power = mult(power, f);
  const LaurentPoly fact = q_factorial(static_cast<unsigned>(k));
  HallElement out;
  for (const auto& [m, c] : power.terms()) {
    try {
      out.add(m, laurent_divexact(c, fact));
    } catch (const DomainError&) {
      throw VerificationFailure("inexact-division: " + c.to_string() + " by [" + std::to_string(k) + "]!");
    }
  }
  return out;
}

HallElement HallAlgebra::ordered_pbw_product(const RepClass& m, const DirectedOrder& order) {
  if (order.rank != rs_.rank()) throw DomainError("order has wrong rank");
  HallElement out = unit();
  for (const auto& r : order.order) {
    const int k = m[sz(rs_.index(r))];
    if (k > 0) out = mult(out, divided_power(r, k));
  }
  return out;
}

bool divided_power_check(HallAlgebra& hall, const RepClass& m, const DirectedOrder& order) {
  return hall.ordered_pbw_product(m, order) == hall.pbw_element(m);
}

StraightenReport straighten_check(HallAlgebra& hall, int k, int l, const DirectedOrder& order) {
  const RootSystem& rs = hall.roots();
  const int size = static_cast<int>(order.order.size());
  if (!(0 <= k && k < l && l < size)) throw DomainError("straighten_check requires 0 <= k < l < N");
  StraightenReport rep;
  rep.k = k;
  rep.l = l;
  rep.beta_k = order.order[sz(k)];
  rep.beta_l = order.order[sz(l)];
  rep.pairing = root_pairing(rs.rank(), rep.beta_k, rep.beta_l);
  rep.leading = LaurentPoly::monomial(rep.pairing);
  const RepClass ek = ExponentVector::unit(rs, rep.beta_k), el = ExponentVector::unit(rs, rep.beta_l);
  rep.mu0_bound = mu0(rs, ek) + mu0(rs, el);

  const HallElement fk = hall.pbw_element(ek), fl = hall.pbw_element(el);
  const HallElement lhs = hall.mult(fl, fk);
  const HallElement ordered = hall.mult(fk, fl);
  const HallElement rest = lhs - ordered.scaled(rep.leading);

  HallElement rhs = ordered.scaled(rep.leading);
  rep.support_ok = true;
  rep.degree_drop_ok = true;
  const HallElement corrections = hall.to_pbw_coordinates(rest);
  for (const auto& [m, c] : corrections.terms()) {
    StraightenTerm t{m, c, mu0(rs, m), true};
    for (int idx = 0; idx < rs.size(); ++idx) {
      if (m[sz(idx)] == 0) continue;
      const int pos = order.position(rs.root(idx));
      if (pos <= k || pos >= l) t.supported_between = false;
    }
    rep.support_ok = rep.support_ok && t.supported_between;
    rep.degree_drop_ok = rep.degree_drop_ok && t.mu0_degree < rep.mu0_bound;
    rhs += hall.ordered_pbw_product(m, order).scaled(c);
    rep.corrections.push_back(std::move(t));
  }
  rep.identity_holds = lhs == rhs;
  return rep;
}

std::string StraightenReport::identity(const RootSystem& rs, const DirectedOrder& order) const {
  (void)rs;
  std::string s = compact_root(beta_l) + compact_root(beta_k) + " = ";
  s += signed_term(leading, compact_root(beta_k) + compact_root(beta_l), true);
  for (const auto& t : corrections) s += signed_term(t.coeff, ordered_monomial(rs, t.m, order, false), false);
  return s;
}

std::string StraightenReport::reversed_identity(const RootSystem& rs, const DirectedOrder& order) const {
  const LaurentPoly inv = LaurentPoly::monomial(-pairing);
  std::string s = compact_root(beta_k) + compact_root(beta_l) + " = ";
  s += signed_term(inv, compact_root(beta_l) + compact_root(beta_k), true);
  for (const auto& t : corrections) s += signed_term(-(t.coeff * inv), ordered_monomial(rs, t.m, order, true), false);
  return s;
}

std::vector<GradedPairResult> graded_relation_report(HallAlgebra& hall, const DirectedOrder& order, const WeightFunction& w) {
  const RootSystem& rs = hall.roots();
  if (w.rank != rs.rank() || static_cast<int>(w.values.size()) != rs.size()) throw DomainError("weight function rank mismatch");
  std::vector<GradedPairResult> out;
  const int size = static_cast<int>(order.order.size());
  for (int k = 0; k < size; ++k)
    for (int l = k + 1; l < size; ++l) {
      GradedPairResult r{k, l, false, true, {}};
      const auto& bk = order.order[sz(k)];
      const auto& bl = order.order[sz(l)];
      const RepClass ek = ExponentVector::unit(rs, bk), el = ExponentVector::unit(rs, bl);
      const RepClass lead = ek + el;
      const long top = w.degree(lead);
      const HallElement prod = hall.to_pbw_coordinates(hall.mult(hall.pbw_element(el), hall.pbw_element(ek)));
      r.leading_ok = prod.coeff(lead) == LaurentPoly::monomial(root_pairing(rs.rank(), bk, bl));
      for (const auto& [m, c] : prod.terms()) {
        if (m == lead) continue;
        if (w.degree(m) >= top) {
          r.drop_ok = false;
          r.offending.push_back(m);
        }
      }
      out.push_back(std::move(r));
    }
  return out;
}

bool graded_relation_check(HallAlgebra& hall, const DirectedOrder& order, const WeightFunction& w) {
  if (classify_weight_function(w).kind != Admissibility::Strong) throw DomainError("weight function is not strongly admissible");
  const auto rows = graded_relation_report(hall, order, w);
  return std::all_of(rows.begin(), rows.end(), [](const GradedPairResult& r) { return r.ok(); });
}

WeakScanReport weak_admissibility_scan(HallAlgebra& hall, const WeightFunction& w, int max_total_dim) {
  const RootSystem& rs = hall.roots();
  if (w.rank != rs.rank() || static_cast<int>(w.values.size()) != rs.size()) throw DomainError("weight function rank mismatch");
  if (max_total_dim > hall.budget().max_total_dim)
    throw BudgetExceeded("scan dimension " + std::to_string(max_total_dim) + " exceeds budget");
  WeakScanReport rep;
  for (long v : w.values)
    if (v <= 0) rep.normalized = false;

  const int n = rs.rank();
  std::vector<long> d(sz(n), 0);
  std::function<void(int, long)> dims = [&](int t, long left) {
    if (t == n) {
      for (const auto& x : rep_classes_of_dim(rs, DimVector{d})) {
        if (x.is_zero()) continue;
        std::vector<long> sub(sz(n), 0);
        std::function<void(int)> subs = [&](int s) {
          if (s == n) {
            for (const auto& [nn, mm] : hall.extension_pairs(x, sub, 2)) {
              ++rep.triples_checked;
              const long wx = w.degree(x), wmn = w.degree(mm) + w.degree(nn);
              const std::string tag = exponent_json(rs, mm) + " " + exponent_json(rs, nn) + " -> " + exponent_json(rs, x);
              if (wx > wmn) {
                rep.weak_ok = false;
                rep.weak_witnesses.push_back(tag);
              } else if (wx == wmn && !(x == mm + nn)) {
                rep.strict_ok = false;
                rep.strict_witnesses.push_back(tag);
              }
            }
            return;
          }
          for (long v = 0; v <= d[sz(s)]; ++v) {
            sub[sz(s)] = v;
            subs(s + 1);
          }
        };
        subs(0);
      }
      return;
    }
    for (long v = 0; v <= left; ++v) {
      d[sz(t)] = v;
      dims(t + 1, left - v);
    }
    d[sz(t)] = 0;
  };
  dims(0, max_total_dim);
  return rep;
}

std::string exponent_json(const RootSystem& rs, const ExponentVector& s) {
  std::string out = "{";
  bool first = true;
  for (int k = 0; k < rs.size(); ++k) {
    if (s[sz(k)] == 0) continue;
    if (!first) out += ",";
    first = false;
    out += "\"" + to_string(rs.root(k)) + "\":" + std::to_string(s[sz(k)]);
  }
  return out + "}";
}

std::string render_hall_element(const RootSystem& rs, const HallElement& h) {
  std::ostringstream os;
  for (const auto& [m, c] : h.terms()) os << c.to_string() << " * u[" << exponent_json(rs, m) << "]\n";
  return os.str();
}

}  // namespace pbwff
