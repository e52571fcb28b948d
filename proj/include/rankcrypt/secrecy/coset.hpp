// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "rankcrypt/linalg/algorithms.hpp"

namespace rankcrypt::secrecy {

using linalg::BaseMatrix;
using linalg::ExtMatrix;
using linalg::ExtVector;

/// Syndrome-form coset coding: the message s selects the coset {x : H x = s}
/// and the transmitted x is uniform inside it.
class CosetScheme {
 public:
  /// h is k x n over GF(q^m) with full row rank k.
  explicit CosetScheme(ExtMatrix h);

  const gf::TowerPtr& tower() const { return h_.tower(); }
  std::size_t n() const { return h_.cols(); }
  std::size_t k() const { return h_.rows(); }
  const ExtMatrix& parity_check() const { return h_; }
  /// n x k with H P = I.
  const ExtMatrix& particular_map() const { return particular_; }
  /// (n - k) x n; rows span the code {x : H x = 0}.
  const ExtMatrix& null_basis() const { return null_basis_; }
  std::size_t randomness_length() const { return null_basis_.rows(); }

  /// Uniform draw from the coset of s using a generator seeded with seed.
  ExtVector encode(std::span<const Elem> s, std::uint64_t seed) const;
  /// x = P s + sum_i r_i N_i.
  ExtVector encode_with(std::span<const Elem> s, std::span<const Elem> r) const;
  ExtVector decode(std::span<const Elem> x) const;

 private:
  ExtMatrix h_;
  ExtMatrix particular_;
  ExtMatrix null_basis_;
};

}  // namespace rankcrypt::secrecy
