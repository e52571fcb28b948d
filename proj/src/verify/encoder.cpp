// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/verify/encoder.hpp"

#include "rankcrypt/linalg/enumerate.hpp"

namespace rankcrypt::verify {

std::uint64_t EnumerableEncoder::message_count() const {
  return linalg::checked_power(tower()->size(), message_length(), linalg::enumeration_cap(),
                               "message enumeration");
}

std::uint64_t EnumerableEncoder::randomness_count() const {
  return linalg::checked_power(tower()->size(), randomness_length(), linalg::enumeration_cap(),
                               "randomness enumeration");
}

ExtVector EnumerableEncoder::encode(std::span<const Elem> s, std::span<const Elem> v) const {
  ExtVector x = linalg::apply(message_map, s);
  const ExtVector r = linalg::apply(randomness_map, v);
  return linalg::add(*tower(), x, r);
}

EnumerableEncoder coset_encoder(const secrecy::CosetScheme& scheme) {
  return {scheme.particular_map(), linalg::transpose(scheme.null_basis())};
}

EnumerableEncoder layered_encoder(const secrecy::LayeredScheme& scheme) {
  const ExtMatrix gt = linalg::transpose(scheme.generator());
  return {linalg::col_range(gt, 0, scheme.k()),
          linalg::col_range(gt, scheme.k(), scheme.k() + scheme.mu())};
}

EnumerableEncoder deterministic_encoder(const ExtMatrix& generator) {
  return {linalg::transpose(generator), ExtMatrix(generator.tower(), generator.cols(), 0)};
}

std::vector<Elem> image_table(const ExtMatrix& map) {
  const gf::FieldTower& f = map.field();
  const std::size_t n = map.rows();
  const std::size_t k = map.cols();
  const std::uint64_t total =
      linalg::checked_power(f.size(), k, linalg::enumeration_cap(), "image enumeration");
  const ExtMatrix cols = linalg::transpose(map);
  const auto o = linalg::ops(map);
  std::vector<Elem> out(total * n, 0);
  std::vector<Elem> u(k);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    linalg::unpack_index(idx, f.size(), u);
    std::span<Elem> dst(out.data() + idx * n, n);
    for (std::size_t i = 0; i < k; ++i) {
      if (u[i] != 0) o.axpy(dst, cols.row(i), u[i]);
    }
  }
  return out;
}

}  // namespace rankcrypt::verify
