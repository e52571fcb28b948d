// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/secrecy/coset.hpp"

#include "rankcrypt/rng.hpp"

namespace rankcrypt::secrecy {

CosetScheme::CosetScheme(ExtMatrix h) : h_(std::move(h)) {
  require(linalg::rank(h_) == h_.rows(), ErrorCode::ParameterViolation,
          "parity check must have full row rank");
  particular_ = ExtMatrix(h_.tower(), h_.cols(), h_.rows());
  std::vector<Elem> unit(h_.rows(), 0);
  for (std::size_t i = 0; i < h_.rows(); ++i) {
    unit[i] = 1;
    const auto sol = linalg::solve(h_, unit);
    for (std::size_t j = 0; j < h_.cols(); ++j) particular_(j, i) = sol.particular[j];
    unit[i] = 0;
  }
  null_basis_ = linalg::right_null_space(h_).basis();
}

ExtVector CosetScheme::encode(std::span<const Elem> s, std::uint64_t seed) const {
  Rng rng(seed);
  std::vector<Elem> r(randomness_length());
  for (Elem& v : r) v = static_cast<Elem>(rng.below(tower()->size()));
  return encode_with(s, r);
}

ExtVector CosetScheme::encode_with(std::span<const Elem> s, std::span<const Elem> r) const {
  require(s.size() == k(), ErrorCode::ShapeMismatch, "message length must equal k");
  require(r.size() == randomness_length(), ErrorCode::ShapeMismatch,
          "randomness length must equal n - k");
  ExtVector x = linalg::apply(particular_, s);
  const auto o = linalg::ops(h_);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != 0) o.axpy(x, null_basis_.row(i), r[i]);
  }
  return x;
}

ExtVector CosetScheme::decode(std::span<const Elem> x) const {
  require(x.size() == n(), ErrorCode::ShapeMismatch, "word length must equal n");
  return linalg::apply(h_, x);
}

}  // namespace rankcrypt::secrecy
