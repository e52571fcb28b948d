// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/gabidulin/code.hpp"

#include <string>

#include "rankcrypt/linalg/enumerate.hpp"

namespace rankcrypt::gabidulin {

ExtMatrix moore_matrix(const gf::TowerPtr& tower, std::span<const Elem> points,
                       std::int64_t first, std::size_t rows) {
  ExtMatrix out(tower, rows, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    Elem v = tower->frobenius(points[j], first);
    for (std::size_t i = 0; i < rows; ++i) {
      out(i, j) = v;
      v = tower->frobenius(v, 1);
    }
  }
  return out;
}

bool independent_over_base(const gf::FieldTower& f, std::span<const Elem> points) {
  return linalg::rank_weight(points, f) == points.size();
}

GabidulinCode GabidulinCode::build(gf::TowerPtr tower, std::size_t n, std::size_t k,
                                   std::vector<Elem> points) {
  require(tower != nullptr, ErrorCode::InvalidArgument, "missing field tower");
  require(n >= 1, ErrorCode::InvalidArgument, "code length must be positive");
  require(tower->m() >= n, ErrorCode::ParameterViolation,
          "Gabidulin codes need m >= n (m=" + std::to_string(tower->m()) +
              ", n=" + std::to_string(n) + ")");
  require(k <= n, ErrorCode::ParameterViolation, "dimension k exceeds length n");
  if (points.empty()) {
    Elem basis = 1;
    for (std::size_t j = 0; j < n; ++j) {
      points.push_back(basis);
      basis *= tower->q();
    }
  }
  require(points.size() == n, ErrorCode::ShapeMismatch, "need exactly n evaluation points");
  for (Elem p : points) {
    require(tower->contains(p), ErrorCode::InvalidArgument, "evaluation point outside GF(q^m)");
  }
  require(independent_over_base(*tower, points), ErrorCode::DependentPoints,
          "evaluation points are linearly dependent over GF(q)");

  GabidulinCode c;
  c.tower_ = tower;
  c.n_ = n;
  c.k_ = k;
  c.points_ = std::move(points);
  c.g_ = moore_matrix(tower, c.points_, 0, k);
  c.h_ = linalg::right_null_space(c.g_).basis();
  if (k < n) {
    const std::int64_t first = -static_cast<std::int64_t>(n - k - 1);
    const auto dual = linalg::right_null_space(moore_matrix(tower, c.points_, first, n - 1));
    require(dual.dim() == 1, ErrorCode::DependentPoints, "dual point computation degenerated");
    const auto row = dual.basis().row(0);
    c.dual_points_.assign(row.begin(), row.end());
  }
  c.info_inverse_ = linalg::invert(linalg::col_range(c.g_, 0, k));
  return c;
}

ExtVector GabidulinCode::encode(std::span<const Elem> u) const {
  require(u.size() == k_, ErrorCode::ShapeMismatch, "message length must equal k");
  return linalg::apply(linalg::transpose(g_), u);
}

ExtVector GabidulinCode::syndrome(std::span<const Elem> y) const {
  require(y.size() == n_, ErrorCode::ShapeMismatch, "word length must equal n");
  return linalg::apply(h_, y);
}

bool GabidulinCode::contains(std::span<const Elem> y) const {
  for (Elem s : syndrome(y)) {
    if (s != 0) return false;
  }
  return true;
}

ExtVector GabidulinCode::message_of(std::span<const Elem> codeword) const {
  require(codeword.size() == n_, ErrorCode::ShapeMismatch, "word length must equal n");
  // c_j = sum_i u_i G_ij for j < k, so u = (G_info^T)^-1 c_info.
  return linalg::apply(linalg::transpose(info_inverse_), codeword.first(k_));
}

namespace {

constexpr std::uint64_t kDistanceCap = 1ull << 20;

}  // namespace

std::size_t min_rank_distance_bruteforce(const ExtMatrix& generator) {
  const gf::FieldTower& f = generator.field();
  const std::size_t k = generator.rows();
  const std::size_t n = generator.cols();
  const std::uint64_t total = linalg::checked_power(f.size(), k, kDistanceCap, "codeword enumeration");
  std::size_t best = n + 1;
  std::vector<Elem> u(k);
  std::vector<Elem> x(n);
  const auto o = linalg::ops(generator);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    linalg::unpack_index(idx, f.size(), u);
    std::fill(x.begin(), x.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (u[i] != 0) o.axpy(x, generator.row(i), u[i]);
    }
    const std::size_t w = linalg::rank_weight(x, f);
    if (w != 0 && w < best) best = w;
  }
  return best;
}

std::size_t min_rank_distance_bruteforce(const GabidulinCode& code) {
  return min_rank_distance_bruteforce(code.generator());
}

bool is_mrd(const ExtMatrix& generator) {
  const std::size_t k = linalg::rank(generator);
  return min_rank_distance_bruteforce(generator) == generator.cols() - k + 1;
}

bool is_mrd(const GabidulinCode& code) { return is_mrd(code.generator()); }

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Ok: return "ok";
    case DecodeStatus::NoCandidate: return "no-candidate";
    case DecodeStatus::Ambiguous: return "ambiguous";
    case DecodeStatus::DecodingFailure: return "decoding-failure";
  }
  return "unknown";
}

}  // namespace rankcrypt::gabidulin
