// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "pbwff/error.hpp"
#include "pbwff/io.hpp"

using namespace pbwff;

TEST_CASE("roots") {
  CHECK(parse_root("1,2", 3) == PositiveRoot{1, 2});
  CHECK_THROWS_AS(parse_root("12", 3), DomainError);
  CHECK_THROWS_AS(parse_root("2,1", 3), DomainError);
  CHECK_THROWS_AS(parse_root("1,4", 3), DomainError);
  CHECK_THROWS_AS(parse_root("1,x", 3), DomainError);
}

TEST_CASE("exponent vectors round trip") {
  const RootSystem rs(3);
  for (const auto& s : lattice_points(parse_weight("1,1,1"))) {
    const Json j = exponent_to_json(rs, s);
    CHECK(exponent_from_json(rs, j) == s);
    CHECK(parse_exponent(rs, j.dump()) == s);
  }
  CHECK(parse_exponent(rs, "0").is_zero());
  CHECK(parse_exponent(rs, "{}").is_zero());
  CHECK(exponent_to_json(rs, ExponentVector::unit(rs, {2, 3})).dump() == "{\"2,3\":1}");
  CHECK_THROWS_AS(parse_exponent(rs, "{\"1,2\":"), DomainError);
  CHECK_THROWS_AS(parse_exponent(rs, "{\"1,2\":-1}"), DomainError);
  CHECK_THROWS_AS(parse_exponent(rs, "{\"1,2\":1.5}"), DomainError);
  CHECK_THROWS_AS(parse_exponent(rs, "[1,2]"), DomainError);
  CHECK_THROWS_AS(parse_exponent(rs, "{\"4,4\":1}"), DomainError);
}

TEST_CASE("weight functions") {
  const auto ff = ff_weights(3);
  CHECK(weight_function_from_json(weight_function_to_json(ff)) == ff);
  CHECK(weight_function_from_json(Json::parse(R"({"n":2,"values":[1,0,1]})")) == WeightFunction{2, {1, 0, 1}});
  CHECK(weight_function_from_json(Json::parse(R"({"n":2,"values":{"2,2":5,"1,1":3,"1,2":4}})")) == WeightFunction{2, {3, 4, 5}});
  CHECK_THROWS_AS(weight_function_from_json(Json::parse(R"({"n":2,"values":[1,0]})")), DomainError);
  CHECK_THROWS_AS(weight_function_from_json(Json::parse(R"({"n":2,"values":{"1,1":1}})")), DomainError);
  CHECK_THROWS_AS(weight_function_from_json(Json::parse(R"({"values":[1]})")), DomainError);
  CHECK_THROWS_AS(weight_function_from_json(Json::parse(R"({"n":2,"values":3})")), DomainError);
}

TEST_CASE("resolving weight functions") {
  CHECK(resolve_weight_function("mu0", 3) == ff_weights(3));
  CHECK(resolve_weight_function("ff", 2) == ff_weights(2));
  CHECK(resolve_weight_function("length", 2) == length_weights(2));
  CHECK(resolve_weight_function(R"({"n":2,"values":[1,1,1]})", 2) == constant_weights(2, 1));
  CHECK_THROWS_AS(resolve_weight_function(R"({"n":2,"values":[1,1,1]})", 3), DomainError);
  CHECK_THROWS_AS(resolve_weight_function("{oops", 2), DomainError);
  CHECK_THROWS_AS(resolve_weight_function("/nonexistent/w.json", 2), DomainError);
  const std::string path = "test_io_weights.json";
  {
    std::ofstream out(path);
    out << weight_function_to_json(ff_weights(2)).dump();
  }
  CHECK(resolve_weight_function(path, 2) == ff_weights(2));
  std::remove(path.c_str());
}

TEST_CASE("reports") {
  const RootSystem rs(2);
  const Json c = classification_to_json(rs, classify_weight_function(constant_weights(2, 1)));
  CHECK(c.dump() == R"({"class":"admissible-strong","coefficients":{"1,1":1,"1,2":0,"2,2":1}})");
  const Json p = polytope_to_json(polytope(parse_weight("1,1")));
  REQUIRE(p.size() == 3);
  CHECK(p[1].dump() == R"({"path":[[1,1],[1,2],[2,2]],"bound":2})");
  const Json g = graded_report_to_json(graded_report(parse_weight("0,1,0"), length_weights(3)));
  CHECK(g["monomial_ideal_ok"] == false);
  CHECK(g["violations"].dump() == R"([{"1,2":1,"2,3":1}])");
  CHECK(g["degree_dims"].dump() == R"({"0":1,"1":4,"2":1})");
}
