// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "rankcrypt/gabidulin/code.hpp"

namespace rankcrypt::secrecy {

using linalg::BaseMatrix;
using linalg::ExtMatrix;
using linalg::ExtVector;

/// Secrecy and error control in one linear map: x = T [0; s; v] where T^T is
/// the full n x n Moore matrix of the evaluation points. Rows of the input
/// vector u' are laid out as
///   [0, n-k-mu)      zero padding (error-control redundancy)
///   [n-k-mu, n-mu)   message s
///   [n-mu, n)        uniform randomness v
/// so x always lies in the [n, k+mu] Gabidulin code spanned by the last
/// k+mu rows of T^T, whose last mu rows generate an [n, mu] MRD code.
class LayeredScheme {
 public:
  static LayeredScheme build(gf::TowerPtr tower, std::size_t n, std::size_t k, std::size_t mu,
                             std::size_t t, std::size_t rho, std::vector<Elem> points = {});

  const gf::TowerPtr& tower() const { return code_.tower(); }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t mu() const { return mu_; }
  std::size_t t() const { return t_; }
  std::size_t rho() const { return rho_; }
  std::size_t padding() const { return n_ - k_ - mu_; }
  /// Minimum rank distance of the outer code, n - k - mu + 1.
  std::size_t d() const { return code_.d(); }
  const std::vector<Elem>& points() const { return points_; }

  const ExtMatrix& transform() const { return t_matrix_; }
  const ExtMatrix& transform_inverse() const { return t_inverse_; }
  /// Last k + mu rows of T^T.
  const ExtMatrix& generator() const { return code_.generator(); }
  /// Last mu rows of T^T.
  ExtMatrix secrecy_generator() const;
  const gabidulin::GabidulinCode& code() const { return code_; }

  /// Rows of T^-1 that read the message back: s = message_parity() * x.
  ExtMatrix message_parity() const;
  /// Rows of T^-1 for the randomness: v = randomness_parity() * x.
  ExtMatrix randomness_parity() const;
  /// First n - mu rows of T^-1: the parity check of the secrecy code.
  ExtMatrix secrecy_parity() const;

  ExtVector encode(std::span<const Elem> s, std::uint64_t seed) const;
  ExtVector encode_with(std::span<const Elem> s, std::span<const Elem> v) const;

  /// Recovers s from y = A x + z. Full-rank A is inverted and handed to the
  /// syndrome decoder; rank-deficient A goes through the oracle.
  gabidulin::DecodeResult decode(const BaseMatrix& a, std::span<const Elem> y) const;

 private:
  LayeredScheme(gabidulin::GabidulinCode code) : code_(std::move(code)) {}

  gabidulin::GabidulinCode code_;
  std::size_t n_ = 0, k_ = 0, mu_ = 0, t_ = 0, rho_ = 0;
  std::vector<Elem> points_;
  ExtMatrix t_matrix_;
  ExtMatrix t_inverse_;
};

}  // namespace rankcrypt::secrecy
