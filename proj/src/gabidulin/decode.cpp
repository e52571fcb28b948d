// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "rankcrypt/gabidulin/code.hpp"
#include "rankcrypt/gabidulin/linearized.hpp"
#include "rankcrypt/gf/phi.hpp"
#include "rankcrypt/linalg/enumerate.hpp"

namespace rankcrypt::gabidulin {

namespace {

DecodeResult failure(DecodeStatus status, std::string detail) {
  DecodeResult r;
  r.status = status;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

OracleDecoder::OracleDecoder(const ExtMatrix& generator, const BaseMatrix& a, std::size_t t,
                             std::size_t rho)
    : tower_(generator.tower()), n_(generator.cols()), k_(generator.rows()), t_(t) {
  linalg::require_same_tower(generator.tower(), a.tower());
  require(a.rows() == n_ && a.cols() == n_, ErrorCode::ShapeMismatch,
          "transfer matrix must be n x n");
  require(rho <= n_ && linalg::rank(a) + rho >= n_, ErrorCode::ParameterViolation,
          "transfer matrix rank is below n - rho");
  const gf::FieldTower& f = *tower_;
  const std::uint64_t total =
      linalg::checked_power(f.size(), k_, kOracleCap, "oracle candidate enumeration");

  // Column images A * g_i for each generator row i.
  const ExtMatrix ag = linalg::embed(a) * linalg::transpose(generator);
  const ExtMatrix ag_rows = linalg::transpose(ag);
  const auto o = linalg::ops(ag_rows);

  images_.assign(total * n_, 0);
  std::vector<Elem> u(k_);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    linalg::unpack_index(idx, f.size(), u);
    std::span<Elem> dst(images_.data() + idx * n_, n_);
    for (std::size_t i = 0; i < k_; ++i) {
      if (u[i] != 0) o.axpy(dst, ag_rows.row(i), u[i]);
    }
  }
}

DecodeResult OracleDecoder::decode(std::span<const Elem> y) const {
  require(y.size() == n_, ErrorCode::ShapeMismatch, "received word length must equal n");
  const gf::FieldTower& f = *tower_;
  const std::uint64_t total = images_.size() / n_;
  std::vector<Elem> diff(n_);
  std::uint64_t found = total;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Elem* img = images_.data() + idx * n_;
    for (std::size_t j = 0; j < n_; ++j) diff[j] = f.sub(y[j], img[j]);
    if (linalg::rank_weight(diff, f) > t_) continue;
    if (found != total) {
      return failure(DecodeStatus::Ambiguous, "messages " + std::to_string(found) + " and " +
                                                  std::to_string(idx) + " both fit the budget");
    }
    found = idx;
  }
  if (found == total) return failure(DecodeStatus::NoCandidate, "no codeword within the budget");
  DecodeResult r;
  r.status = DecodeStatus::Ok;
  r.message.assign(k_, 0);
  linalg::unpack_index(found, f.size(), r.message);
  return r;
}

DecodeResult decode_oracle(const ExtMatrix& generator, const BaseMatrix& a,
                           std::span<const Elem> y, std::size_t t, std::size_t rho) {
  DecodeResult r = OracleDecoder(generator, a, t, rho).decode(y);
  if (r.ok()) r.codeword = linalg::apply(linalg::transpose(generator), r.message);
  return r;
}

DecodeResult decode_oracle(const GabidulinCode& code, const BaseMatrix& a,
                           std::span<const Elem> y, std::size_t t, std::size_t rho) {
  return decode_oracle(code.generator(), a, y, t, rho);
}

DecodeResult decode_syndrome(const GabidulinCode& code, std::span<const Elem> y, std::size_t t) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  require(y.size() == n, ErrorCode::ShapeMismatch, "received word length must equal n");
  require(2 * t <= n - k, ErrorCode::ParameterViolation,
          "syndrome decoding needs 2t <= n - k");
  const gf::FieldTower& f = code.field();
  for (Elem v : y) require(f.contains(v), ErrorCode::InvalidArgument, "symbol outside GF(q^m)");

  const std::size_t r = n - k;
  const std::vector<Elem>& h = code.dual_points();

  // s_l = sum_j h_j^[l] y_j
  std::vector<Elem> s(r, 0);
  bool clean = true;
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t j = 0; j < n; ++j) {
      s[l] = f.add(s[l], f.mul(f.frobenius(h[j], static_cast<std::int64_t>(l)), y[j]));
    }
    clean = clean && s[l] == 0;
  }

  std::vector<Elem> e(n, 0);
  if (!clean) {
    const ShiftRegister reg = berlekamp_massey(f, s);
    if (reg.length > t) {
      return failure(DecodeStatus::DecodingFailure,
                     "error span polynomial has q-degree " + std::to_string(reg.length) +
                         " > t");
    }
    // Error values e_j = sum_p a_p B_pj with a the root space of Gamma.
    const std::vector<Elem> a = root_space(f, reg.connection);
    if (a.size() != reg.length) {
      return failure(DecodeStatus::DecodingFailure, "root space dimension does not match");
    }
    const std::size_t w = a.size();

    // s_l^[-l] = sum_p a_p^[-l] x_p
    linalg::ExtMatrix lhs(code.tower(), r, w);
    std::vector<Elem> rhs(r);
    for (std::size_t l = 0; l < r; ++l) {
      const std::int64_t back = -static_cast<std::int64_t>(l);
      for (std::size_t p = 0; p < w; ++p) lhs(l, p) = f.frobenius(a[p], back);
      rhs[l] = f.frobenius(s[l], back);
    }
    const auto xs = linalg::solve(lhs, rhs);
    if (!xs.unique()) {
      return failure(DecodeStatus::DecodingFailure, "error locator system is inconsistent");
    }

    // x_p = sum_j B_pj h_j with B over GF(q)
    const linalg::BaseMatrix hmap = linalg::transpose(gf::phi_expand(code.tower(), h));
    for (std::size_t p = 0; p < w; ++p) {
      const linalg::BaseMatrix target = gf::phi_expand(code.tower(), std::span(&xs.particular[p], 1));
      const auto b = linalg::solve(hmap, target.row(0));
      if (!b.consistent) {
        return failure(DecodeStatus::DecodingFailure, "error location system is inconsistent");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (b.particular[j] != 0) e[j] = f.add(e[j], f.mul(a[p], b.particular[j]));
      }
    }
  }

  DecodeResult out;
  out.codeword = linalg::sub(f, y, e);
  if (linalg::rank_weight(e, f) > t || !code.contains(out.codeword)) {
    return failure(DecodeStatus::DecodingFailure, "corrected word is not a codeword within t");
  }
  out.status = DecodeStatus::Ok;
  out.message = code.message_of(out.codeword);
  return out;
}

}  // namespace rankcrypt::gabidulin
