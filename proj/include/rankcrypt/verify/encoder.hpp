// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "rankcrypt/gabidulin/code.hpp"
#include "rankcrypt/secrecy/coset.hpp"
#include "rankcrypt/secrecy/layered.hpp"

namespace rankcrypt::verify {

using linalg::BaseMatrix;
using linalg::ExtMatrix;
using linalg::ExtVector;

/// Linear stochastic encoder x = M_s s + M_v v with s and v uniform over
/// GF(q^m)^k and GF(q^m)^r. Every scheme in the library has this form, which
/// is what makes exhaustive enumeration exact.
struct EnumerableEncoder {
  ExtMatrix message_map;     // n x k
  ExtMatrix randomness_map;  // n x r

  const gf::TowerPtr& tower() const { return message_map.tower(); }
  std::size_t n() const { return message_map.rows(); }
  std::size_t message_length() const { return message_map.cols(); }
  std::size_t randomness_length() const { return randomness_map.cols(); }
  /// q^(mk) and q^(mr), checked against the enumeration cap.
  std::uint64_t message_count() const;
  std::uint64_t randomness_count() const;

  ExtVector encode(std::span<const Elem> s, std::span<const Elem> v) const;
};

EnumerableEncoder coset_encoder(const secrecy::CosetScheme& scheme);
EnumerableEncoder layered_encoder(const secrecy::LayeredScheme& scheme);
/// No randomness: x = G^T u.
EnumerableEncoder deterministic_encoder(const ExtMatrix& generator);

/// All images M u for u in index order (q^(m * cols) rows of length n).
std::vector<Elem> image_table(const ExtMatrix& map);

}  // namespace rankcrypt::verify
