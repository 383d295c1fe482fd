// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pbwff/classical_module.hpp"
#include "pbwff/fflv_polytope.hpp"
#include "pbwff/quiver.hpp"

namespace pbwff {

using Json = nlohmann::ordered_json;

/// "i,j" -> PositiveRoot; throws DomainError when malformed or outside rank n.
PositiveRoot parse_root(std::string_view text, int n);

/// {"i,j": k, ...}, zero entries omitted, canonical root order.
Json exponent_to_json(const RootSystem& rs, const ExponentVector& s);
ExponentVector exponent_from_json(const RootSystem& rs, const Json& j);
/// JSON object text, or "0" for the zero vector.
ExponentVector parse_exponent(const RootSystem& rs, std::string_view text);

/// [{"path": [[i,j], ...], "bound": b}, ...]
Json polytope_to_json(const PolytopeDescription& p);

/// {"n": 3, "values": [...]} in canonical root order, or values keyed "i,j".
WeightFunction weight_function_from_json(const Json& j);
Json weight_function_to_json(const WeightFunction& w);
/// "mu0", "ff", "length", inline JSON, or a path to a JSON file.
WeightFunction resolve_weight_function(const std::string& text, int n);

/// {"class": "...", "coefficients": {"i,j": a, ...}}
Json classification_to_json(const RootSystem& rs, const Classification& c);

Json graded_report_to_json(const GradedReport& r);

}  // namespace pbwff
