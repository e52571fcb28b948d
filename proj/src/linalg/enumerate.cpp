// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/linalg/enumerate.hpp"

#include <cstdlib>
#include <string>

#include "rankcrypt/linalg/algorithms.hpp"

namespace rankcrypt::linalg {

std::uint64_t enumeration_cap() {
  static const std::uint64_t cap = [] {
    const char* env = std::getenv("RANKCRYPT_ENUM_CAP");
    if (env == nullptr || *env == '\0') return kDefaultEnumCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    return (end && *end == '\0' && v > 0) ? static_cast<std::uint64_t>(v) : kDefaultEnumCap;
  }();
  return cap;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap,
                            const std::string& what) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) {
      fail(ErrorCode::CapExceeded, what + " exceeds the enumeration cap of " + std::to_string(cap));
    }
    r *= base;
  }
  require(r <= cap, ErrorCode::CapExceeded,
          what + " exceeds the enumeration cap of " + std::to_string(cap));
  return r;
}

std::uint64_t gaussian_binomial(std::uint32_t q, std::size_t n, std::size_t dim) {
  if (dim > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::size_t j = 0; j < n - i; ++j) a *= q;
    for (std::size_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

void unpack_index(std::uint64_t index, std::uint32_t radix, std::span<Elem> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(index % radix);
    index /= radix;
  }
}

BaseMatrix base_matrix_from_index(const gf::TowerPtr& tower, std::size_t rows, std::size_t cols,
                                  std::uint64_t index) {
  std::vector<Elem> data(rows * cols);
  unpack_index(index, tower->q(), data);
  return BaseMatrix(tower, rows, cols, std::move(data));
}

namespace {

void choose_pivots(std::size_t n, std::size_t dim, std::size_t start,
                   std::vector<std::size_t>& current,
                   std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == dim) {
    out.push_back(current);
    return;
  }
  for (std::size_t c = start; c + (dim - current.size()) <= n; ++c) {
    current.push_back(c);
    choose_pivots(n, dim, c + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<BaseMatrix> subspace_representatives(const gf::TowerPtr& tower, std::size_t n,
                                                 std::size_t dim) {
  const std::uint32_t q = tower->q();
  checked_power(q, dim * (n - std::min(dim, n)) + 1, enumeration_cap(), "subspace enumeration");
  std::vector<BaseMatrix> out;
  if (dim > n) return out;
  std::vector<std::vector<std::size_t>> pivot_sets;
  std::vector<std::size_t> current;
  choose_pivots(n, dim, 0, current, pivot_sets);

  for (const auto& pivots : pivot_sets) {
    // Free positions: right of the row's pivot and not in a pivot column.
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free.emplace_back(r, c);
      }
    }
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < free.size(); ++i) combos *= q;
    std::vector<Elem> digits(free.size());
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      unpack_index(idx, q, digits);
      BaseMatrix b(tower, dim, n);
      for (std::size_t r = 0; r < dim; ++r) b(r, pivots[r]) = 1;
      for (std::size_t i = 0; i < free.size(); ++i) b(free[i].first, free[i].second) = digits[i];
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<ExtVector> rank_bounded_vectors(const gf::TowerPtr& tower, std::size_t n,
                                            std::size_t max_rank) {
  const std::uint64_t total =
      checked_power(tower->size(), n, enumeration_cap(), "error-vector enumeration");
  std::vector<ExtVector> out;
  ExtVector v(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    unpack_index(idx, tower->size(), v);
    if (rank_weight(v, *tower) <= max_rank) out.push_back(v);
  }
  return out;
}

}  // namespace rankcrypt::linalg
