// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <string>

#include "pbwff/error.hpp"
#include "pbwff/kernels.hpp"

namespace pbwff::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* env = std::getenv("PBWFF_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && backend_available(Backend::Avx2)) return Backend::Avx2;
  }
  return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return detail::avx2_table() != nullptr && cpu_has_avx2();
  }
  return false;
}

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

const KernelTable& table(Backend b) {
  if (!backend_available(b)) throw DomainError("kernel backend not available: " + std::string(backend_name(b)));
  return b == Backend::Avx2 ? *detail::avx2_table() : detail::scalar_table();
}

Backend active_backend() {
  static const Backend b = detect();
  return b;
}

const KernelTable& active() { return table(active_backend()); }

}  // namespace pbwff::kernels
