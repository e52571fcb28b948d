// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2; only reached through avx2_kernels() after a runtime
// CPU check.

#include <immintrin.h>

#include "rankcrypt/simd/kernels.hpp"

namespace rankcrypt::simd {

namespace {

// (x mod q) for 4 exact integer-valued doubles x < 2^53. floor(x * (1/q)) can
// be off by one in either direction, so the remainder is corrected once.
inline __m256d mod_pd(__m256d x, __m256d qd, __m256d invq) {
  const __m256d quo = _mm256_floor_pd(_mm256_mul_pd(x, invq));
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(quo, qd));
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), qd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, qd, _CMP_GE_OQ), qd));
  return r;
}

void base_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                    std::uint32_t c, std::uint32_t q) {
  if (c == 0) return;
  std::size_t i = 0;
  if (q == 2) {
    for (; i + 8 <= n; i += 8) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
  } else {
    const __m256d qd = _mm256_set1_pd(static_cast<double>(q));
    const __m256d invq = _mm256_set1_pd(1.0 / static_cast<double>(q));
    const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
    for (; i + 4 <= n; i += 4) {
      const __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
      const __m128i s = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
      const __m256d x = _mm256_add_pd(_mm256_mul_pd(cd, _mm256_cvtepi32_pd(s)),
                                      _mm256_cvtepi32_pd(d));
      _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i),
                       _mm256_cvttpd_epi32(mod_pd(x, qd, invq)));
    }
  }
  scalar_kernels().base_axpy(dst + i, src + i, n - i, c, q);
}

void base_scale_avx2(std::uint32_t* dst, std::size_t n, std::uint32_t c,
                     std::uint32_t q) {
  if (c == 1) return;
  std::size_t i = 0;
  if (c == 0) {
    for (; i + 8 <= n; i += 8) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_setzero_si256());
    }
  } else {
    const __m256d qd = _mm256_set1_pd(static_cast<double>(q));
    const __m256d invq = _mm256_set1_pd(1.0 / static_cast<double>(q));
    const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
    for (; i + 4 <= n; i += 4) {
      const __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
      const __m256d x = _mm256_mul_pd(cd, _mm256_cvtepi32_pd(d));
      _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i),
                       _mm256_cvttpd_epi32(mod_pd(x, qd, invq)));
    }
  }
  scalar_kernels().base_scale(dst + i, n - i, c, q);
}

// c * s for 8 lanes via log/exp gathers; zero lanes of s are masked out.
inline __m256i mul_lanes(__m256i s, __m256i logc, const ExtTables& t) {
  const __m256i is_zero = _mm256_cmpeq_epi32(s, _mm256_setzero_si256());
  const __m256i ls = _mm256_i32gather_epi32(reinterpret_cast<const int*>(t.log), s, 4);
  const __m256i prod = _mm256_i32gather_epi32(reinterpret_cast<const int*>(t.exp),
                                              _mm256_add_epi32(ls, logc), 4);
  return _mm256_andnot_si256(is_zero, prod);
}

void ext_add_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                  const ExtTables& t) {
  std::size_t i = 0;
  if (t.q == 2) {
    for (; i + 8 <= n; i += 8) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
  }
  scalar_kernels().ext_add(dst + i, src + i, n - i, t);
}

void ext_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                   std::uint32_t c, const ExtTables& t) {
  if (c == 0) return;
  std::size_t i = 0;
  if (t.q == 2) {
    const __m256i logc = _mm256_set1_epi32(static_cast<int>(t.log[c]));
    for (; i + 8 <= n; i += 8) {
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                          _mm256_xor_si256(a, mul_lanes(s, logc, t)));
    }
  }
  scalar_kernels().ext_axpy(dst + i, src + i, n - i, c, t);
}

void ext_scale_avx2(std::uint32_t* dst, std::size_t n, std::uint32_t c,
                    const ExtTables& t) {
  std::size_t i = 0;
  if (c == 0) {
    for (; i + 8 <= n; i += 8) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_setzero_si256());
    }
  } else {
    const __m256i logc = _mm256_set1_epi32(static_cast<int>(t.log[c]));
    for (; i + 8 <= n; i += 8) {
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mul_lanes(s, logc, t));
    }
  }
  scalar_kernels().ext_scale(dst + i, n - i, c, t);
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2",       base_axpy_avx2, base_scale_avx2,
                                 ext_add_avx2, ext_axpy_avx2,  ext_scale_avx2};
  return table;
}

}  // namespace rankcrypt::simd
