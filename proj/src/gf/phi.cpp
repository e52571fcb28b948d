// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/gf/phi.hpp"

namespace rankcrypt::gf {

linalg::BaseMatrix phi_expand(const TowerPtr& tower, std::span<const Elem> v) {
  const std::uint32_t m = tower->m();
  linalg::BaseMatrix out(tower, v.size(), m);
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(tower->contains(v[i]), ErrorCode::InvalidArgument, "element outside GF(q^m)");
    Elem x = v[i];
    for (std::uint32_t j = 0; j < m; ++j) {
      out(i, j) = x % tower->q();
      x /= tower->q();
    }
  }
  return out;
}

std::vector<Elem> phi_contract(const linalg::BaseMatrix& a) {
  require(a.cols() == a.field().m(), ErrorCode::ShapeMismatch,
          "phi_contract needs exactly m columns");
  std::vector<Elem> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = a.field().from_digits(a.row(i));
  return out;
}

linalg::BaseMatrix phi_expand(const linalg::ExtMatrix& a) {
  const std::uint32_t m = a.field().m();
  linalg::BaseMatrix out(a.tower(), a.rows(), a.cols() * m);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Elem x = a(r, c);
      for (std::uint32_t j = 0; j < m; ++j) {
        out(r, c * m + j) = x % a.field().q();
        x /= a.field().q();
      }
    }
  }
  return out;
}

linalg::ExtMatrix phi_contract_blocks(const linalg::BaseMatrix& a, std::size_t r) {
  const std::uint32_t m = a.field().m();
  require(a.cols() == r * m, ErrorCode::ShapeMismatch, "expected r*m columns");
  linalg::ExtMatrix out(a.tower(), a.rows(), r);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t c = 0; c < r; ++c) {
      out(i, c) = a.field().from_digits(a.row(i).subspan(c * m, m));
    }
  }
  return out;
}

}  // namespace rankcrypt::gf
