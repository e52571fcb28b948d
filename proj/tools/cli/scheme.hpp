// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "rankcrypt/io/descriptors.hpp"
#include "rankcrypt/secrecy/coset.hpp"
#include "rankcrypt/secrecy/layered.hpp"
#include "rankcrypt/verify/encoder.hpp"

namespace rankcrypt::cli {

/// A scheme file, built: either a layered scheme or a plain coset scheme.
class Scheme {
 public:
  explicit Scheme(io::SchemeDescriptor d);

  const io::SchemeDescriptor& descriptor() const { return d_; }
  const gf::TowerPtr& tower() const { return d_.tower; }
  std::size_t n() const { return d_.n; }
  std::size_t k() const { return d_.k; }
  std::size_t mu() const { return d_.mu; }
  std::size_t t() const { return d_.t; }
  std::size_t rho() const { return d_.rho; }
  const secrecy::LayeredScheme* layered() const { return layered_ ? &*layered_ : nullptr; }

  verify::EnumerableEncoder encoder() const;
  /// Parity check whose rank additivity stands for secrecy: the coset H, or
  /// the secrecy-code parity check of a layered scheme.
  linalg::ExtMatrix secrecy_parity() const;

  linalg::ExtVector encode(std::span<const Elem> s, std::uint64_t seed) const;
  gabidulin::DecodeResult decode(const linalg::BaseMatrix& a, std::span<const Elem> y) const;

 private:
  io::SchemeDescriptor d_;
  std::optional<secrecy::LayeredScheme> layered_;
  std::optional<secrecy::CosetScheme> coset_;
};

}  // namespace rankcrypt::cli
