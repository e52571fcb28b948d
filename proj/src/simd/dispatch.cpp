// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string_view>

#include "rankcrypt/simd/kernels.hpp"

namespace rankcrypt::simd {

#if defined(RANKCRYPT_HAVE_AVX2)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(RANKCRYPT_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable* selected = [] {
    const char* env = std::getenv("RANKCRYPT_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    const KernelTable* avx2 = avx2_kernels();
    return avx2 != nullptr ? avx2 : &scalar_kernels();
  }();
  return *selected;
}

}  // namespace rankcrypt::simd
