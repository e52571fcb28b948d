// SPDX-License-Identifier: Apache-2.0

#include "cli/scheme.hpp"

namespace rankcrypt::cli {

Scheme::Scheme(io::SchemeDescriptor d) : d_(std::move(d)) {
  if (d_.kind == "layered") {
    layered_ = secrecy::LayeredScheme::build(d_.tower, d_.n, d_.k, d_.mu, d_.t, d_.rho, d_.points);
    d_.points = layered_->points();
  } else {
    require(d_.t == 0 && d_.rho == 0, ErrorCode::ParameterViolation,
            "coset schemes carry no error-control budget");
    coset_.emplace(d_.h);
  }
}

verify::EnumerableEncoder Scheme::encoder() const {
  return layered_ ? verify::layered_encoder(*layered_) : verify::coset_encoder(*coset_);
}

linalg::ExtMatrix Scheme::secrecy_parity() const {
  return layered_ ? layered_->secrecy_parity() : coset_->parity_check();
}

linalg::ExtVector Scheme::encode(std::span<const Elem> s, std::uint64_t seed) const {
  return layered_ ? layered_->encode(s, seed) : coset_->encode(s, seed);
}

gabidulin::DecodeResult Scheme::decode(const linalg::BaseMatrix& a, std::span<const Elem> y) const {
  if (layered_) return layered_->decode(a, y);
  gabidulin::DecodeResult r;
  if (linalg::rank(a) != n()) {
    r.status = gabidulin::DecodeStatus::DecodingFailure;
    r.detail = "coset schemes need an invertible transfer matrix";
    return r;
  }
  const auto x = linalg::apply(linalg::embed(linalg::invert(a)), y);
  r.status = gabidulin::DecodeStatus::Ok;
  r.message = coset_->decode(x);
  r.codeword = x;
  return r;
}

}  // namespace rankcrypt::cli
