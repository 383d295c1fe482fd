// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "pbwff/root_system.hpp"

namespace pbwff {

/// Additive function on representations / PBW monomials, given by its values
/// on the positive roots in canonical order. This is the pluggable degree
/// function of every filtration computation.
struct WeightFunction {
  int rank = 1;
  std::vector<long> values;

  long degree(const ExponentVector& s) const {
    long d = 0;
    for (std::size_t k = 0; k < values.size(); ++k) d += values[k] * s[k];
    return d;
  }
  long value(const RootSystem& rs, const PositiveRoot& r) const {
    return values[static_cast<std::size_t>(rs.index(r))];
  }
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

/// deg f_{i,j} = (j-i+1)(n-j+1).
WeightFunction ff_weights(int n);
/// Every root vector has degree 1 (original PBW filtration).
WeightFunction length_weights(int n);
WeightFunction constant_weights(int n, long value);

}  // namespace pbwff
