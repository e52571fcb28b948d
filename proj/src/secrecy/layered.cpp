// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/secrecy/layered.hpp"

#include <string>

#include "rankcrypt/rng.hpp"

namespace rankcrypt::secrecy {

LayeredScheme LayeredScheme::build(gf::TowerPtr tower, std::size_t n, std::size_t k,
                                   std::size_t mu, std::size_t t, std::size_t rho,
                                   std::vector<Elem> points) {
  require(tower != nullptr, ErrorCode::InvalidArgument, "missing field tower");
  require(tower->m() >= n, ErrorCode::ParameterViolation,
          "universal secrecy needs m >= n (m=" + std::to_string(tower->m()) +
              ", n=" + std::to_string(n) + ")");
  require(k + mu + 2 * t + rho <= n, ErrorCode::ParameterViolation,
          "rate condition k + mu + 2t + rho <= n violated (" + std::to_string(k) + " + " +
              std::to_string(mu) + " + 2*" + std::to_string(t) + " + " + std::to_string(rho) +
              " > " + std::to_string(n) + ")");

  // The full-length code fixes the default points and checks independence.
  const auto full = gabidulin::GabidulinCode::build(tower, n, n, std::move(points));
  const std::int64_t pad = static_cast<std::int64_t>(n - k - mu);
  std::vector<Elem> shifted(n);
  for (std::size_t j = 0; j < n; ++j) shifted[j] = tower->frobenius(full.points()[j], pad);

  LayeredScheme s(gabidulin::GabidulinCode::build(tower, n, k + mu, shifted));
  s.n_ = n;
  s.k_ = k;
  s.mu_ = mu;
  s.t_ = t;
  s.rho_ = rho;
  s.points_ = full.points();
  s.t_matrix_ = linalg::transpose(full.generator());
  s.t_inverse_ = linalg::invert(s.t_matrix_);
  return s;
}

ExtMatrix LayeredScheme::secrecy_generator() const {
  return linalg::row_range(code_.generator(), k_, k_ + mu_);
}

ExtMatrix LayeredScheme::message_parity() const {
  return linalg::row_range(t_inverse_, padding(), padding() + k_);
}

ExtMatrix LayeredScheme::randomness_parity() const {
  return linalg::row_range(t_inverse_, n_ - mu_, n_);
}

ExtMatrix LayeredScheme::secrecy_parity() const {
  return linalg::row_range(t_inverse_, 0, n_ - mu_);
}

ExtVector LayeredScheme::encode(std::span<const Elem> s, std::uint64_t seed) const {
  Rng rng(seed);
  std::vector<Elem> v(mu_);
  for (Elem& e : v) e = static_cast<Elem>(rng.below(tower()->size()));
  return encode_with(s, v);
}

ExtVector LayeredScheme::encode_with(std::span<const Elem> s, std::span<const Elem> v) const {
  require(s.size() == k_, ErrorCode::ShapeMismatch, "message length must equal k");
  require(v.size() == mu_, ErrorCode::ShapeMismatch, "randomness length must equal mu");
  std::vector<Elem> u(s.begin(), s.end());
  u.insert(u.end(), v.begin(), v.end());
  return code_.encode(u);
}

gabidulin::DecodeResult LayeredScheme::decode(const BaseMatrix& a, std::span<const Elem> y) const {
  require(a.rows() == n_ && a.cols() == n_, ErrorCode::ShapeMismatch,
          "transfer matrix must be n x n");
  require(y.size() == n_, ErrorCode::ShapeMismatch, "received word length must equal n");
  gabidulin::DecodeResult r;
  if (linalg::rank(a) == n_) {
    const ExtVector y0 = linalg::apply(linalg::embed(linalg::invert(a)), y);
    r = gabidulin::decode_syndrome(code_, y0, t_);
  } else {
    r = gabidulin::decode_oracle(code_, a, y, t_, rho_);
  }
  if (r.ok()) r.message.resize(k_);
  return r;
}

}  // namespace rankcrypt::secrecy
