// SPDX-License-Identifier: Apache-2.0
#include "pbwff/io.hpp"

#include <charconv>
#include <fstream>

#include "pbwff/error.hpp"

namespace pbwff {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

PositiveRoot parse_root(std::string_view text, int n) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw DomainError("root must be written i,j");
  const PositiveRoot r{parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
  if (!RootSystem(n).contains(r)) throw DomainError("root " + std::string(text) + " outside rank " + std::to_string(n));
  return r;
}

Json exponent_to_json(const RootSystem& rs, const ExponentVector& s) {
  Json j = Json::object();
  for (int k = 0; k < rs.size(); ++k)
    if (s[static_cast<std::size_t>(k)] != 0) j[to_string(rs.root(k))] = s[static_cast<std::size_t>(k)];
  return j;
}

ExponentVector exponent_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object()) throw DomainError("exponent vector must be a JSON object");
  ExponentVector s(static_cast<std::size_t>(rs.size()));
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer() || value.get<int>() < 0) throw DomainError("multiplicity of " + key + " must be a nonnegative integer");
    s[static_cast<std::size_t>(rs.index(parse_root(key, rs.rank())))] += value.get<int>();
  }
  return s;
}

ExponentVector parse_exponent(const RootSystem& rs, std::string_view text) {
  if (text == "0") return ExponentVector(static_cast<std::size_t>(rs.size()));
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed exponent vector: ") + e.what());
  }
  return exponent_from_json(rs, j);
}

Json polytope_to_json(const PolytopeDescription& p) {
  Json out = Json::array();
  for (const auto& ineq : p.inequalities) {
    Json path = Json::array();
    for (const auto& r : ineq.path.roots) path.push_back({r.i, r.j});
    out.push_back({{"path", path}, {"bound", ineq.bound}});
  }
  return out;
}

WeightFunction weight_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("values")) throw DomainError("weight function needs \"n\" and \"values\"");
  const int n = j.at("n").get<int>();
  const RootSystem rs(n);
  WeightFunction w{n, std::vector<long>(static_cast<std::size_t>(rs.size()), 0)};
  const Json& v = j.at("values");
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != rs.size()) throw DomainError("weight function needs one value per positive root");
    for (std::size_t k = 0; k < v.size(); ++k) w.values[k] = v[k].get<long>();
  } else if (v.is_object()) {
    std::vector<bool> seen(static_cast<std::size_t>(rs.size()), false);
    for (const auto& [key, value] : v.items()) {
      const auto idx = static_cast<std::size_t>(rs.index(parse_root(key, n)));
      w.values[idx] = value.get<long>();
      seen[idx] = true;
    }
    for (int k = 0; k < rs.size(); ++k)
      if (!seen[static_cast<std::size_t>(k)]) throw DomainError("missing value for root " + to_string(rs.root(k)));
  } else {
    throw DomainError("\"values\" must be an array or an object");
  }
  return w;
}

Json weight_function_to_json(const WeightFunction& w) {
  const RootSystem rs(w.rank);
  Json values = Json::object();
  for (int k = 0; k < rs.size(); ++k) values[to_string(rs.root(k))] = w.values[static_cast<std::size_t>(k)];
  return {{"n", w.rank}, {"values", values}};
}

WeightFunction resolve_weight_function(const std::string& text, int n) {
  if (text == "mu0" || text == "ff") return ff_weights(n);
  if (text == "length") return length_weights(n);
  Json j;
  try {
    if (!text.empty() && text.front() == '{') {
      j = Json::parse(text);
    } else {
      std::ifstream in(text);
      if (!in) throw DomainError("cannot read weight function file " + text);
      j = Json::parse(in);
    }
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed weight function: ") + e.what());
  }
  WeightFunction w = weight_function_from_json(j);
  if (w.rank != n) throw DomainError("weight function has rank " + std::to_string(w.rank) + ", expected " + std::to_string(n));
  return w;
}

Json classification_to_json(const RootSystem& rs, const Classification& c) {
  Json coeffs = Json::object();
  for (int k = 0; k < rs.size(); ++k) coeffs[to_string(rs.root(k))] = c.coefficients[static_cast<std::size_t>(k)];
  return {{"class", to_string(c.kind)}, {"coefficients", coeffs}};
}

Json graded_report_to_json(const GradedReport& r) {
  const RootSystem rs(r.lambda.rank());
  Json dims = Json::object();
  for (const auto& [d, v] : r.degree_dims) dims[std::to_string(d)] = v;
  Json order = Json::array();
  for (const auto& b : r.order) order.push_back(to_string(b));
  Json violations = Json::array();
  for (const auto& s : r.violations) violations.push_back(exponent_to_json(rs, s));
  Json dependent = Json::array();
  for (const auto& s : r.dependent) dependent.push_back(exponent_to_json(rs, s));
  return {{"lambda", r.lambda.m},
          {"order", order},
          {"module_dim", r.module_dim},
          {"lattice_points", r.lattice_points},
          {"degree_dims", dims},
          {"basis_ok", r.basis_ok},
          {"monomial_ideal_ok", r.monomial_ideal_ok},
          {"violations", violations},
          {"dependent", dependent}};
}

}  // namespace pbwff
