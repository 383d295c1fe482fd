// SPDX-License-Identifier: Apache-2.0
// Command-line front end: every computation prints JSON (CSV for tables).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pbwff/classical_module.hpp"
#include "pbwff/error.hpp"
#include "pbwff/fflv_polytope.hpp"
#include "pbwff/hall_algebra.hpp"
#include "pbwff/io.hpp"
#include "pbwff/quiver.hpp"
#include "pbwff/verify.hpp"

using namespace pbwff;

namespace {

struct Options {
  int n = 0;
  std::string lambda, mu;
  std::string format;  // empty: json, or csv for tables
  std::string out;
  std::string weights = "mu0";
  std::string degree = "ff";
  std::string a, b, m, mprime, x, pair;
  bool all = false;
  bool strict = false;
  bool no_precondition = false;
  int max_dim = 4;
  int max_total_dim = 6;
  long max_module_dim = kDefaultMaxModuleDim;
  int max_height = 3;
};

// Result of one subcommand: buffered text plus exit status.
struct Emit {
  std::string text;
  int status = 0;
};

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  return v ? std::atoi(v) : fallback;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Weight weight_arg(const Options& o, const std::string& text) {
  Weight w = parse_weight(text);
  if (o.n != 0 && w.rank() != o.n) throw DomainError("weight " + text + " has rank " + std::to_string(w.rank()) + ", expected " + std::to_string(o.n));
  validate_rank(w.rank());
  return w;
}

int rank_arg(const Options& o) {
  validate_rank(o.n);
  return o.n;
}

WeightFunction degree_function(const Options& o, int n) {
  if (o.degree == "ff") return ff_weights(n);
  if (o.degree == "length") return length_weights(n);
  return resolve_weight_function(o.degree, n);
}

ModuleBudget module_budget(const Options& o) {
  ModuleBudget b;
  b.max_module_dim = o.max_module_dim;
  if (b.max_module_dim > kDefaultMaxModuleDim) std::cerr << "warning: module budget raised above default\n";
  return b;
}

HallBudget hall_budget(const Options& o) {
  HallBudget b;
  b.max_total_dim = o.max_total_dim;
  if (b.max_total_dim > 6) std::cerr << "warning: Hall budget raised above default\n";
  return b;
}

std::string csv_exponents(const RootSystem& rs, const std::vector<ExponentVector>& pts) {
  std::ostringstream os;
  for (int k = 0; k < rs.size(); ++k) os << (k ? "," : "") << "\"" << to_string(rs.root(k)) << "\"";
  os << "\n";
  for (const auto& s : pts) {
    for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
    os << "\n";
  }
  return os.str();
}

std::string u_poly(const LaurentPoly& p) {
  std::string s = p.to_string();
  for (char& c : s)
    if (c == 'q') c = 'u';
  return s;
}

Emit polytope_inequalities(const Options& o) { return {dump(polytope_to_json(polytope(weight_arg(o, o.lambda)))), 0}; }

Emit polytope_points(const Options& o) {
  const Weight w = weight_arg(o, o.lambda);
  const RootSystem rs(w.rank());
  const auto pts = lattice_points(w);
  if (o.format == "csv") return {csv_exponents(rs, pts), 0};
  Json arr = Json::array();
  for (const auto& s : pts) arr.push_back(exponent_to_json(rs, s));
  return {dump({{"lambda", w.m}, {"count", pts.size()}, {"points", arr}}), 0};
}

Emit polytope_minkowski(const Options& o) {
  const Weight a = weight_arg(o, o.lambda), b = weight_arg(o, o.mu);
  if (a.rank() != b.rank()) throw DomainError("lambda and mu have different ranks");
  const auto sum = sumset(lattice_points(a), lattice_points(b));
  const auto target = lattice_points(a + b);
  const bool eq = sum == target;
  return {dump({{"lambda", a.m}, {"mu", b.m}, {"sumset_count", sum.size()}, {"target_count", target.size()}, {"equal", eq}}), eq ? 0 : 1};
}

Emit root_dim(const Options& o) {
  const Weight w = weight_arg(o, o.lambda);
  return {dump({{"lambda", w.m}, {"dim", weyl_dim(w).get_str()}}), 0};
}

Emit root_pairing(const Options& o) {
  const int n = rank_arg(o);
  return {dump({{"a", o.a}, {"b", o.b}, {"pairing", pbwff::root_pairing(n, parse_root(o.a, n), parse_root(o.b, n))}}), 0};
}

Emit quiver_hom_table(const Options& o) {
  const RootSystem rs(rank_arg(o));
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& f : rs.roots()) {
      Json row = Json::object();
      for (const auto& t : rs.roots()) row[to_string(t)] = hom_dim(rs.rank(), f, t);
      rows.push_back({{"from", to_string(f)}, {"hom", row}});
    }
    return {dump(rows), 0};
  }
  std::ostringstream os;
  os << "from\\to";
  for (const auto& t : rs.roots()) os << ",\"" << to_string(t) << "\"";
  os << "\n";
  for (const auto& f : rs.roots()) {
    os << "\"" << to_string(f) << "\"";
    for (const auto& t : rs.roots()) os << "," << hom_dim(rs.rank(), f, t);
    os << "\n";
  }
  return {os.str(), 0};
}

Emit quiver_ar(const Options& o) {
  const int n = rank_arg(o);
  const RootSystem rs(n);
  Json arr = Json::array();
  for (const auto& u : rs.roots()) {
    if (is_projective(n, u)) continue;
    const auto seq = ar_sequence(n, u);
    arr.push_back({{"left", to_string(seq.left)}, {"middle", exponent_to_json(rs, seq.middle)}, {"right", to_string(seq.right)}});
  }
  return {dump(arr), 0};
}

Emit quiver_classify(const Options& o) {
  const int n = rank_arg(o);
  return {dump(classification_to_json(RootSystem(n), classify_weight_function(resolve_weight_function(o.weights, n)))), 0};
}

Emit quiver_degeneration(const Options& o) {
  const RootSystem rs(rank_arg(o));
  const auto m = parse_exponent(rs, o.m), mp = parse_exponent(rs, o.mprime);
  return {dump({{"m", exponent_to_json(rs, m)}, {"mprime", exponent_to_json(rs, mp)}, {"leq", degeneration_leq(rs, m, mp)}}), 0};
}

Emit hall_mult(const Options& o) {
  HallAlgebra h(rank_arg(o), hall_budget(o));
  const auto m = parse_exponent(h.roots(), o.m), nn = parse_exponent(h.roots(), o.mprime);
  return {render_hall_element(h.roots(), h.basis_product(m, nn)), 0};
}

Emit hall_polynomial(const Options& o) {
  HallAlgebra h(rank_arg(o), hall_budget(o));
  const auto& rs = h.roots();
  const auto m = parse_exponent(rs, o.m), nn = parse_exponent(rs, o.mprime), x = parse_exponent(rs, o.x);
  const LaurentPoly poly = h.hall_polynomial(m, nn, x);
  Json j{{"m", exponent_to_json(rs, m)}, {"n", exponent_to_json(rs, nn)}, {"x", exponent_to_json(rs, x)}, {"polynomial", u_poly(poly)}};
  for (const auto& rec : h.polynomial_log()) {
    j["interpolation_primes"] = rec.interpolation_primes;
    j["held_out_prime"] = rec.held_out_prime;
    j["held_out_count"] = rec.held_out_count.get_str();
  }
  return {dump(j), 0};
}

Emit hall_straighten(const Options& o) {
  const int n = rank_arg(o);
  HallAlgebra h(n, hall_budget(o));
  const auto order = directed_enumeration(n);
  const auto& rs = h.roots();
  if (o.all) {
    std::ostringstream os;
    os << "k,l,beta_k,beta_l,identity,support,degree_drop,relation\n";
    bool ok = true;
    for (int k = 0; k < rs.size(); ++k)
      for (int l = k + 1; l < rs.size(); ++l) {
        const auto r = straighten_check(h, k, l, order);
        ok = ok && r.ok();
        auto pf = [](bool b) { return b ? "pass" : "fail"; };
        os << k + 1 << "," << l + 1 << ",\"" << to_string(r.beta_k) << "\",\"" << to_string(r.beta_l) << "\"," << pf(r.identity_holds) << ","
           << pf(r.support_ok) << "," << pf(r.degree_drop_ok) << ",\"" << r.identity(rs, order) << "\"\n";
      }
    return {os.str(), ok ? 0 : 1};
  }
  const auto colon = o.pair.find(':');
  if (colon == std::string::npos) throw DomainError("--pair must look like 1,2:2,3");
  const PositiveRoot a = parse_root(o.pair.substr(0, colon), n), b = parse_root(o.pair.substr(colon + 1), n);
  const int pa = order.position(a), pb = order.position(b);
  if (pa == pb) throw DomainError("--pair needs two different roots");
  const auto r = straighten_check(h, std::min(pa, pb), std::max(pa, pb), order);
  // Left-hand side is always F_b F_a.
  const std::string identity = pa < pb ? r.identity(rs, order) : r.reversed_identity(rs, order);
  Json corr = Json::array();
  for (const auto& t : r.corrections)
    corr.push_back({{"m", exponent_to_json(rs, t.m)}, {"coeff", t.coeff.to_string()}, {"mu0", t.mu0_degree}, {"supported_between", t.supported_between}});
  Json j{{"beta_k", to_string(r.beta_k)},
         {"beta_l", to_string(r.beta_l)},
         {"identity", identity},
         {"pairing", r.pairing},
         {"corrections", corr},
         {"mu0_bound", r.mu0_bound},
         {"identity_holds", r.identity_holds},
         {"support_ok", r.support_ok},
         {"degree_drop_ok", r.degree_drop_ok}};
  return {dump(j), r.ok() ? 0 : 1};
}

Emit hall_graded_check(const Options& o) {
  const int n = rank_arg(o);
  HallAlgebra h(n, hall_budget(o));
  const auto order = directed_enumeration(n);
  const auto w = resolve_weight_function(o.weights, n);
  if (!o.no_precondition && classify_weight_function(w).kind != Admissibility::Strong)
    throw DomainError("weight function is not strongly admissible (use --no-precondition for the raw report)");
  const auto& rs = h.roots();
  Json rows = Json::array();
  bool ok = true;
  for (const auto& r : graded_relation_report(h, order, w)) {
    Json off = Json::array();
    for (const auto& m : r.offending) off.push_back(exponent_to_json(rs, m));
    rows.push_back({{"beta_k", to_string(order.order[static_cast<std::size_t>(r.k)])},
                    {"beta_l", to_string(order.order[static_cast<std::size_t>(r.l)])},
                    {"leading_ok", r.leading_ok},
                    {"drop_ok", r.drop_ok},
                    {"offending", off}});
    ok = ok && r.ok();
  }
  return {dump({{"holds", ok}, {"pairs", rows}}), ok ? 0 : 1};
}

Emit hall_weak_scan(const Options& o) {
  const int n = rank_arg(o);
  HallAlgebra h(n, hall_budget(o));
  const auto rep = weak_admissibility_scan(h, resolve_weight_function(o.weights, n), o.max_dim);
  const bool ok = rep.ok(o.strict);
  return {dump({{"weak_ok", rep.weak_ok},
                {"strict_ok", rep.strict_ok},
                {"normalized", rep.normalized},
                {"triples_checked", rep.triples_checked},
                {"weak_witnesses", rep.weak_witnesses},
                {"strict_witnesses", rep.strict_witnesses},
                {"passed", ok}}),
          ok ? 0 : 1};
}

Emit module_report(const Options& o) {
  const Weight w = weight_arg(o, o.lambda);
  const auto rep = graded_report(w, degree_function(o, w.rank()), module_budget(o));
  const bool ok = rep.basis_ok && rep.monomial_ideal_ok;
  if (o.format == "csv") {
    std::ostringstream os;
    os << "degree,dim\n";
    for (const auto& [d, v] : rep.degree_dims) os << d << "," << v << "\n";
    return {os.str(), ok ? 0 : 1};
  }
  return {dump(graded_report_to_json(rep)), ok ? 0 : 1};
}

Emit module_basis(const Options& o) {
  const Weight w = weight_arg(o, o.lambda);
  const auto rep = graded_report(w, degree_function(o, w.rank()), module_budget(o));
  const RootSystem rs(w.rank());
  Json dep = Json::array();
  for (const auto& s : rep.dependent) dep.push_back(exponent_to_json(rs, s));
  return {dump({{"lambda", w.m}, {"lattice_points", rep.lattice_points}, {"basis_ok", rep.basis_ok}, {"dependent", dep}}), rep.basis_ok ? 0 : 1};
}

Emit module_ideal_generators(const Options& o) {
  const Weight w = weight_arg(o, o.lambda);
  const RootSystem rs(w.rank());
  Json arr = Json::array();
  for (const auto& g : ideal_generators(w)) arr.push_back({{"exponent", exponent_to_json(rs, g)}, {"monomial", monomial_string(rs, g)}});
  return {dump({{"lambda", w.m}, {"generators", arr}}), 0};
}

Emit module_cartan_check(const Options& o) {
  const Weight a = weight_arg(o, o.lambda), b = weight_arg(o, o.mu);
  const bool ok = cartan_component_check(a, b, module_budget(o));
  return {dump({{"lambda", a.m}, {"mu", b.m}, {"dim", weyl_dim(a + b).get_str()}, {"independent", ok}}), ok ? 0 : 1};
}

Emit verify_all(const Options& o) {
  VerifyOptions v;
  if (o.n != 0) {
    validate_rank(o.n);
    v.lattice_max_rank = o.n;
    v.minkowski_max_rank = std::min(o.n, 3);
  }
  v.lattice_max_height = o.max_height;
  Json arr = Json::array();
  bool ok = true;
  for (const auto& r : run_acceptance(v)) {
    arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    ok = ok && r.passed;
  }
  return {dump({{"passed", ok}, {"criteria", arr}}), ok ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PBW filtration toolkit for sl_{n+1}"};
  app.require_subcommand(1);
  Options o;
  o.max_total_dim = env_int("PBWFF_MAX_TOTAL_DIM", o.max_total_dim);
  o.max_module_dim = env_int("PBWFF_MAX_MODULE_DIM", static_cast<int>(o.max_module_dim));
  std::function<Emit(const Options&)> action;

  auto common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Write the report to FILE");
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Emit (*fn)(const Options&)) {
    CLI::App* c = parent->add_subcommand(name, help);
    common(c);
    c->callback([&action, fn] { action = fn; });
    return c;
  };

  CLI::App* poly = app.add_subcommand("polytope", "Dyck-path polytope P(lambda)");
  poly->require_subcommand(1);
  leaf(poly, "inequalities", "Inequalities of P(lambda)", polytope_inequalities)->add_option("--lambda", o.lambda)->required();
  leaf(poly, "points", "Lattice points S(lambda)", polytope_points)->add_option("--lambda", o.lambda)->required();
  {
    auto* c = leaf(poly, "minkowski", "Compare S(lambda)+S(mu) with S(lambda+mu)", polytope_minkowski);
    c->add_option("--lambda", o.lambda)->required();
    c->add_option("--mu", o.mu)->required();
  }
  for (auto* c : poly->get_subcommands({})) c->add_option("--n", o.n);

  CLI::App* root = app.add_subcommand("root", "Root system of type A_n");
  root->require_subcommand(1);
  {
    auto* c = leaf(root, "dim", "Weyl dimension of V(lambda)", root_dim);
    c->add_option("--lambda", o.lambda)->required();
    c->add_option("--n", o.n);
    c = leaf(root, "pairing", "(alpha, beta) for two positive roots", root_pairing);
    c->add_option("--n", o.n)->required();
    c->add_option("--a", o.a)->required();
    c->add_option("--b", o.b)->required();
  }

  CLI::App* quiver = app.add_subcommand("quiver", "Representations of 1 -> 2 -> ... -> n");
  quiver->require_subcommand(1);
  {
    auto* c = leaf(quiver, "hom-table", "dim Hom between indecomposables", quiver_hom_table);
    c->add_option("--n", o.n)->required();
    c = leaf(quiver, "ar", "Almost split sequences", quiver_ar);
    c->add_option("--n", o.n)->required();
    c = leaf(quiver, "classify", "Classify a weight function", quiver_classify);
    c->add_option("--n", o.n)->required();
    c->add_option("--weights", o.weights, "mu0, ff, length, or a JSON file");
    c = leaf(quiver, "degeneration", "Degeneration order test m <= m'", quiver_degeneration);
    c->add_option("--n", o.n)->required();
    c->add_option("--m", o.m)->required();
    c->add_option("--mprime", o.mprime)->required();
  }

  CLI::App* hall = app.add_subcommand("hall", "Hall algebra computations");
  hall->require_subcommand(1);
  {
    auto* c = leaf(hall, "mult", "u[M] u[N]", hall_mult);
    c->add_option("--m", o.m, "left factor, e.g. {\"1,2\":1}")->required();
    c->add_option("--nn", o.mprime, "right factor")->required();
    c = leaf(hall, "polynomial", "Hall polynomial F^X_{M,N}(u)", hall_polynomial);
    c->add_option("--m", o.m)->required();
    c->add_option("--nn", o.mprime)->required();
    c->add_option("--x", o.x)->required();
    c = leaf(hall, "straighten", "Straightening relation for a pair of roots", hall_straighten);
    c->add_option("--pair", o.pair, "a:b, e.g. 1,2:2,3");
    c->add_flag("--all", o.all, "Every pair k < l, one CSV row each");
    c = leaf(hall, "graded-check", "q-commutativity of the associated graded", hall_graded_check);
    c->add_option("--weights", o.weights);
    c->add_flag("--no-precondition", o.no_precondition);
    c = leaf(hall, "weak-scan", "Scan short exact sequences over GF(2)", hall_weak_scan);
    c->add_option("--weights", o.weights);
    c->add_option("--max-dim", o.max_dim);
    c->add_flag("--strict", o.strict);
  }
  for (auto* c : hall->get_subcommands({})) {
    c->add_option("--n", o.n)->required();
    c->add_option("--max-total-dim", o.max_total_dim);
  }

  CLI::App* module = app.add_subcommand("module", "The filtered module V(lambda)");
  module->require_subcommand(1);
  {
    auto* c = leaf(module, "report", "Graded dimensions and monomial ideal check", module_report);
    c->add_option("--degree", o.degree, "ff, length, or a JSON file");
    c = leaf(module, "basis", "Compatible monomial basis check", module_basis);
    c->add_option("--degree", o.degree);
    leaf(module, "ideal-generators", "Minimal monomials outside S(lambda)", module_ideal_generators);
    c = leaf(module, "cartan-check", "Independence in V(lambda) (x) V(mu)", module_cartan_check);
    c->add_option("--mu", o.mu)->required();
  }
  for (auto* c : module->get_subcommands({})) {
    c->add_option("--lambda", o.lambda)->required();
    c->add_option("--n", o.n);
    c->add_option("--max-module-dim", o.max_module_dim);
  }

  CLI::App* verify = app.add_subcommand("verify", "Desk-scale verification suite");
  verify->require_subcommand(1);
  {
    auto* c = leaf(verify, "all", "Run every check", verify_all);
    c->add_option("--n", o.n, "largest rank for the lattice point counts");
    c->add_option("--max-height", o.max_height);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Emit result;
  try {
    result = action(o);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << result.text;
  }
  return result.status;
}
