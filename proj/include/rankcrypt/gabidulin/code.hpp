// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "rankcrypt/linalg/algorithms.hpp"

namespace rankcrypt::gabidulin {

using linalg::BaseMatrix;
using linalg::ExtMatrix;
using linalg::ExtVector;

/// Moore matrix: row i holds points_j^(q^(first + i)).
ExtMatrix moore_matrix(const gf::TowerPtr& tower, std::span<const Elem> points,
                       std::int64_t first, std::size_t rows);

/// True iff the points are linearly independent over GF(q).
bool independent_over_base(const gf::FieldTower& f, std::span<const Elem> points);

/// [n, k] Gabidulin code over GF(q^m) with generator rows g^(q^i), i < k.
class GabidulinCode {
 public:
  /// Empty points select (1, a, ..., a^(n-1)).
  static GabidulinCode build(gf::TowerPtr tower, std::size_t n, std::size_t k,
                             std::vector<Elem> points = {});

  const gf::TowerPtr& tower() const { return tower_; }
  const gf::FieldTower& field() const { return *tower_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t d() const { return n_ - k_ + 1; }
  const std::vector<Elem>& points() const { return points_; }
  const ExtMatrix& generator() const { return g_; }
  /// Reduced echelon basis of the right null space of G.
  const ExtMatrix& parity_check() const { return h_; }
  /// Points h of the dual code; row l of the Frobenius-form parity check is h^(q^l).
  const std::vector<Elem>& dual_points() const { return dual_points_; }

  ExtVector encode(std::span<const Elem> u) const;
  ExtVector syndrome(std::span<const Elem> y) const;
  bool contains(std::span<const Elem> y) const;
  /// Inverse of encode on codewords.
  ExtVector message_of(std::span<const Elem> codeword) const;

 private:
  GabidulinCode() = default;

  gf::TowerPtr tower_;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<Elem> points_;
  std::vector<Elem> dual_points_;
  ExtMatrix g_;
  ExtMatrix h_;
  ExtMatrix info_inverse_;  // inverse of the first k columns of G
};

/// Minimum rank weight over the nonzero codewords spanned by generator rows.
/// Capped at q^(mk) <= 2^20.
std::size_t min_rank_distance_bruteforce(const ExtMatrix& generator);
std::size_t min_rank_distance_bruteforce(const GabidulinCode& code);

/// Brute-force distance equals n - k + 1 (k = rank of the generator).
bool is_mrd(const ExtMatrix& generator);
bool is_mrd(const GabidulinCode& code);

enum class DecodeStatus { Ok, NoCandidate, Ambiguous, DecodingFailure };
const char* to_string(DecodeStatus s);

struct DecodeResult {
  DecodeStatus status = DecodeStatus::DecodingFailure;
  ExtVector message;   // u, when status is Ok
  ExtVector codeword;  // G^T u, when status is Ok
  std::string detail;

  bool ok() const { return status == DecodeStatus::Ok; }
};

inline constexpr std::uint64_t kOracleCap = 1ull << 16;

/// Oracle decoding against one fixed transfer matrix. Precomputes A x for
/// every codeword so repeated decodes under the same A are cheap.
class OracleDecoder {
 public:
  OracleDecoder(const ExtMatrix& generator, const BaseMatrix& a, std::size_t t, std::size_t rho);

  DecodeResult decode(std::span<const Elem> y) const;

 private:
  gf::TowerPtr tower_;
  std::size_t n_;
  std::size_t k_;
  std::size_t t_;
  std::vector<Elem> images_;  // row idx: A * G^T * u(idx)
};

/// Ground-truth decoder for y = A x + z with rank A >= n - rho and
/// rank z <= t: tries every message in lexicographic order.
DecodeResult decode_oracle(const ExtMatrix& generator, const BaseMatrix& a,
                           std::span<const Elem> y, std::size_t t, std::size_t rho);
DecodeResult decode_oracle(const GabidulinCode& code, const BaseMatrix& a,
                           std::span<const Elem> y, std::size_t t, std::size_t rho);

/// Errors-only decoder for y = x + e, rank e <= t, 2t <= n - k.
DecodeResult decode_syndrome(const GabidulinCode& code, std::span<const Elem> y, std::size_t t);

}  // namespace rankcrypt::gabidulin
