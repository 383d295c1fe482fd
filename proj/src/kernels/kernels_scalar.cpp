// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <limits>

#include "pbwff/kernels.hpp"

namespace pbwff::kernels::detail {
namespace {

void add_scaled_scalar(std::span<std::int32_t> sums, std::span<const std::int32_t> incidence, std::int32_t scale) {
  for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += scale * incidence[k];
}

std::int32_t min_slack_scalar(std::span<const std::int32_t> sums, std::span<const std::int32_t> bounds,
                              std::span<const std::int32_t> incidence) {
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  for (std::size_t k = 0; k < sums.size(); ++k) {
    if (incidence[k] != 0) best = std::min(best, bounds[k] - sums[k]);
  }
  return best;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{&add_scaled_scalar, &min_slack_scalar};
  return t;
}

}  // namespace pbwff::kernels::detail
