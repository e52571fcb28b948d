// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace rankcrypt::simd {

/// Read-only view of the multiplicative tables of a GF(q^m) tower. Elements
/// are packed integers sum(d_i * q^i) over the power basis.
struct ExtTables {
  const std::uint32_t* log = nullptr;  // log[0] is a placeholder
  const std::uint32_t* exp = nullptr;  // length 2 * order, no reduction needed
  std::uint32_t order = 0;             // q^m - 1
  std::uint32_t q = 0;
  std::uint32_t m = 0;
};

// Inner loops of row reduction and codeword arithmetic. Every variant must
// produce bit-identical results to the scalar reference; inputs are assumed
// reduced (digits < q, elements < q^m).
struct KernelTable {
  const char* name;
  // dst[i] = (dst[i] + c * src[i]) mod q
  void (*base_axpy)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                    std::uint32_t c, std::uint32_t q);
  // dst[i] = c * dst[i] mod q
  void (*base_scale)(std::uint32_t* dst, std::size_t n, std::uint32_t c,
                     std::uint32_t q);
  // dst[i] = dst[i] + src[i] in GF(q^m)
  void (*ext_add)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                  const ExtTables& t);
  // dst[i] = dst[i] + c * src[i] in GF(q^m)
  void (*ext_axpy)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                   std::uint32_t c, const ExtTables& t);
  // dst[i] = c * dst[i] in GF(q^m)
  void (*ext_scale)(std::uint32_t* dst, std::size_t n, std::uint32_t c,
                    const ExtTables& t);
};

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Selected once per process: AVX2 when available, unless the environment
/// variable RANKCRYPT_SIMD is set to "scalar".
const KernelTable& active_kernels();

// Scalar helpers shared by the variants for tails and odd characteristic.
std::uint32_t ext_add_digits(std::uint32_t a, std::uint32_t b, std::uint32_t q,
                             std::uint32_t m);
inline std::uint32_t ext_mul_tables(std::uint32_t a, std::uint32_t b,
                                    const ExtTables& t) {
  if (a == 0 || b == 0) return 0;
  return t.exp[t.log[a] + t.log[b]];
}

inline void base_axpy(std::span<std::uint32_t> dst,
                      std::span<const std::uint32_t> src, std::uint32_t c,
                      std::uint32_t q) {
  active_kernels().base_axpy(dst.data(), src.data(), dst.size(), c, q);
}
inline void base_scale(std::span<std::uint32_t> dst, std::uint32_t c,
                       std::uint32_t q) {
  active_kernels().base_scale(dst.data(), dst.size(), c, q);
}
inline void ext_add(std::span<std::uint32_t> dst,
                    std::span<const std::uint32_t> src, const ExtTables& t) {
  active_kernels().ext_add(dst.data(), src.data(), dst.size(), t);
}
inline void ext_axpy(std::span<std::uint32_t> dst,
                     std::span<const std::uint32_t> src, std::uint32_t c,
                     const ExtTables& t) {
  active_kernels().ext_axpy(dst.data(), src.data(), dst.size(), c, t);
}
inline void ext_scale(std::span<std::uint32_t> dst, std::uint32_t c,
                      const ExtTables& t) {
  active_kernels().ext_scale(dst.data(), dst.size(), c, t);
}

}  // namespace rankcrypt::simd
