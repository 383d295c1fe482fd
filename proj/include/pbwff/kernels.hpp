// SPDX-License-Identifier: Apache-2.0
#pragma once

// Data-parallel inner loops of the lattice-point enumeration. Each kernel has
// a scalar reference implementation and, on x86-64, an AVX2 variant picked at
// runtime. Both must produce identical results on every input.

#include <cstdint>
#include <span>
#include <string_view>

namespace pbwff::kernels {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  /// sums[k] += scale * incidence[k]; incidence entries are 0 or 1.
  void (*add_scaled)(std::span<std::int32_t> sums, std::span<const std::int32_t> incidence, std::int32_t scale);
  /// min over k with incidence[k] != 0 of bounds[k] - sums[k];
  /// INT32_MAX when no entry is incident.
  std::int32_t (*min_slack)(std::span<const std::int32_t> sums, std::span<const std::int32_t> bounds,
                            std::span<const std::int32_t> incidence);
};

bool backend_available(Backend b);
std::string_view backend_name(Backend b);
const KernelTable& table(Backend b);

/// Best available backend, unless PBWFF_KERNELS=scalar|avx2 selects one.
Backend active_backend();
const KernelTable& active();

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
}  // namespace detail

}  // namespace pbwff::kernels
