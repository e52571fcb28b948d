// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/simd/kernels.hpp"

namespace rankcrypt::simd {

std::uint32_t ext_add_digits(std::uint32_t a, std::uint32_t b, std::uint32_t q,
                             std::uint32_t m) {
  if (q == 2) return a ^ b;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint32_t d = a % q + b % q;
    if (d >= q) d -= q;
    out += d * place;
    a /= q;
    b /= q;
    place *= q;
  }
  return out;
}

namespace {

void base_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src,
                      std::size_t n, std::uint32_t c, std::uint32_t q) {
  if (c == 0) return;
  if (q == 2) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(
        (dst[i] + static_cast<std::uint64_t>(c) * src[i]) % q);
  }
}

void base_scale_scalar(std::uint32_t* dst, std::size_t n, std::uint32_t c,
                       std::uint32_t q) {
  if (c == 1) return;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % q);
  }
}

void ext_add_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                    const ExtTables& t) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = ext_add_digits(dst[i], src[i], t.q, t.m);
}

void ext_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src,
                     std::size_t n, std::uint32_t c, const ExtTables& t) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = ext_add_digits(dst[i], ext_mul_tables(c, src[i], t), t.q, t.m);
  }
}

void ext_scale_scalar(std::uint32_t* dst, std::size_t n, std::uint32_t c,
                      const ExtTables& t) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = ext_mul_tables(c, dst[i], t);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",        base_axpy_scalar, base_scale_scalar,
                                 ext_add_scalar,  ext_axpy_scalar,  ext_scale_scalar};
  return table;
}

}  // namespace rankcrypt::simd
