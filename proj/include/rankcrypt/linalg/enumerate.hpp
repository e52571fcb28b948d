// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>

#include "rankcrypt/linalg/matrix.hpp"

namespace rankcrypt::linalg {

/// Default bound on brute-force state counts; RANKCRYPT_ENUM_CAP overrides it.
inline constexpr std::uint64_t kDefaultEnumCap = 1ull << 22;
std::uint64_t enumeration_cap();

/// base^exp, throwing CapExceeded if the result would pass cap.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap,
                            const std::string& what);

/// Number of dim-dimensional subspaces of GF(q)^n.
std::uint64_t gaussian_binomial(std::uint32_t q, std::size_t n, std::size_t dim);

/// Writes index in base radix into out, most significant digit first, so
/// increasing indices walk the vectors in lexicographic order.
void unpack_index(std::uint64_t index, std::uint32_t radix, std::span<Elem> out);

/// rows x cols GF(q) matrix whose row-major digits spell index.
BaseMatrix base_matrix_from_index(const gf::TowerPtr& tower, std::size_t rows, std::size_t cols,
                                  std::uint64_t index);

/// One reduced echelon basis per dim-dimensional subspace of GF(q)^n.
std::vector<BaseMatrix> subspace_representatives(const gf::TowerPtr& tower, std::size_t n,
                                                 std::size_t dim);

/// Every vector in GF(q^m)^n of rank weight at most max_rank, in index order.
std::vector<ExtVector> rank_bounded_vectors(const gf::TowerPtr& tower, std::size_t n,
                                            std::size_t max_rank);

}  // namespace rankcrypt::linalg
