// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankcrypt/gabidulin/code.hpp"

namespace rankcrypt::gabidulin {

/// r-fold Cartesian product of a code over GF(q^n): codewords are n x r
/// matrices whose columns are base codewords, seen over GF(q) as n x (r n)
/// packets.
class ProductCode {
 public:
  ProductCode(GabidulinCode base, std::size_t r);

  const GabidulinCode& base() const { return base_; }
  std::size_t r() const { return r_; }
  std::size_t packet_length() const { return r_ * base_.field().m(); }

  /// u is k x r, the result n x r.
  ExtMatrix encode(const ExtMatrix& u) const;
  BaseMatrix expand(const ExtMatrix& x) const;
  ExtMatrix contract(const BaseMatrix& packets) const;

  struct Decoded {
    DecodeStatus status = DecodeStatus::DecodingFailure;
    ExtMatrix message;
  };
  /// Column-wise syndrome decoding; a rank-t error on the packets is rank <= t
  /// on every column.
  Decoded decode(const ExtMatrix& y, std::size_t t) const;

  std::size_t min_rank_distance_bruteforce() const;

 private:
  GabidulinCode base_;
  std::size_t r_;
};

ProductCode cartesian_product(const GabidulinCode& code, std::size_t r);

}  // namespace rankcrypt::gabidulin
