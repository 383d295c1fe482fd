// SPDX-License-Identifier: Apache-2.0
// Compiled with -mavx2; only entered after a runtime CPU check.
#include <algorithm>
#include <limits>

#include "pbwff/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace pbwff::kernels::detail {
namespace {

void add_scaled_avx2(std::span<std::int32_t> sums, std::span<const std::int32_t> incidence, std::int32_t scale) {
  const std::size_t n = sums.size();
  const __m256i vscale = _mm256_set1_epi32(scale);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sums.data() + k));
    __m256i inc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(incidence.data() + k));
    s = _mm256_add_epi32(s, _mm256_mullo_epi32(inc, vscale));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(sums.data() + k), s);
  }
  for (; k < n; ++k) sums[k] += scale * incidence[k];
}

std::int32_t min_slack_avx2(std::span<const std::int32_t> sums, std::span<const std::int32_t> bounds,
                            std::span<const std::int32_t> incidence) {
  constexpr std::int32_t kNone = std::numeric_limits<std::int32_t>::max();
  const std::size_t n = sums.size();
  const __m256i vnone = _mm256_set1_epi32(kNone);
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = vnone;
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sums.data() + k));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bounds.data() + k));
    __m256i inc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(incidence.data() + k));
    __m256i slack = _mm256_sub_epi32(b, s);
    __m256i absent = _mm256_cmpeq_epi32(inc, zero);
    slack = _mm256_blendv_epi8(slack, vnone, absent);
    acc = _mm256_min_epi32(acc, slack);
  }
  __m128i lo = _mm256_castsi256_si128(acc);
  __m128i hi = _mm256_extracti128_si256(acc, 1);
  __m128i m = _mm_min_epi32(lo, hi);
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  std::int32_t best = _mm_cvtsi128_si32(m);
  for (; k < n; ++k) {
    if (incidence[k] != 0) best = std::min(best, bounds[k] - sums[k]);
  }
  return best;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable t{&add_scaled_avx2, &min_slack_avx2};
  return &t;
}

}  // namespace pbwff::kernels::detail

#else

namespace pbwff::kernels::detail {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace pbwff::kernels::detail

#endif
