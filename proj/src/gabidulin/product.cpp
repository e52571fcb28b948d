// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/gabidulin/product.hpp"

#include "rankcrypt/gf/phi.hpp"
#include "rankcrypt/linalg/enumerate.hpp"

namespace rankcrypt::gabidulin {

ProductCode::ProductCode(GabidulinCode base, std::size_t r) : base_(std::move(base)), r_(r) {
  require(r >= 1, ErrorCode::InvalidArgument, "product needs r >= 1");
  require(base_.field().m() == base_.n(), ErrorCode::ShapeMismatch,
          "product codes slice packets of length r*n; the base code needs m == n");
}

ExtMatrix ProductCode::encode(const ExtMatrix& u) const {
  require(u.rows() == base_.k() && u.cols() == r_, ErrorCode::ShapeMismatch,
          "product message must be k x r");
  return linalg::transpose(base_.generator()) * u;
}

BaseMatrix ProductCode::expand(const ExtMatrix& x) const { return gf::phi_expand(x); }

ExtMatrix ProductCode::contract(const BaseMatrix& packets) const {
  require(packets.rows() == base_.n(), ErrorCode::ShapeMismatch, "need n packets");
  return gf::phi_contract_blocks(packets, r_);
}

ProductCode::Decoded ProductCode::decode(const ExtMatrix& y, std::size_t t) const {
  require(y.rows() == base_.n() && y.cols() == r_, ErrorCode::ShapeMismatch,
          "received product word must be n x r");
  Decoded out{DecodeStatus::Ok, ExtMatrix(base_.tower(), base_.k(), r_)};
  for (std::size_t c = 0; c < r_; ++c) {
    const DecodeResult col = decode_syndrome(base_, y.col(c), t);
    if (!col.ok()) {
      out.status = col.status;
      return out;
    }
    for (std::size_t i = 0; i < base_.k(); ++i) out.message(i, c) = col.message[i];
  }
  return out;
}

std::size_t ProductCode::min_rank_distance_bruteforce() const {
  const gf::FieldTower& f = base_.field();
  const std::size_t k = base_.k();
  const std::uint64_t total =
      linalg::checked_power(f.size(), k * r_, 1ull << 20, "product codeword enumeration");
  std::size_t best = base_.n() + 1;
  std::vector<Elem> digits(k * r_);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    linalg::unpack_index(idx, f.size(), digits);
    const ExtMatrix x = encode(ExtMatrix(base_.tower(), k, r_, digits));
    const std::size_t w = linalg::rank(expand(x));
    if (w != 0 && w < best) best = w;
  }
  return best;
}

ProductCode cartesian_product(const GabidulinCode& code, std::size_t r) {
  return ProductCode(code, r);
}

}  // namespace rankcrypt::gabidulin
