// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>

#include "rankcrypt/verify/leakage.hpp"

namespace rankcrypt::verify {

inline constexpr const char* kFiniteSearchLabel = "finite-search corroboration";

struct ConverseCandidate {
  ExtMatrix h;
  bool secure = false;
  std::optional<BaseMatrix> witness;
  std::optional<LeakageReport> leakage;
};

/// Every coset encoder with a full-rank k x n parity check over GF(q^m),
/// each swept against all GF(q) observations of at most mu rows. Covers
/// linear coset encoders only; it corroborates, it does not prove.
struct ConverseReport {
  std::string label = kFiniteSearchLabel;
  std::uint32_t q = 0, m = 0;
  std::size_t n = 0, mu = 0, k = 0;
  std::vector<ConverseCandidate> candidates;
  std::size_t secure_count = 0;

  bool all_leak() const { return secure_count == 0; }
};

ConverseReport converse_search_packet_length(std::uint32_t q, std::size_t n, std::size_t mu,
                                             std::size_t k, std::uint32_t m);

/// Parameter tuple (n, k, mu, t, rho).
using RateTuple = std::array<std::size_t, 5>;

struct RateGateReport {
  std::string label = kFiniteSearchLabel;
  std::size_t checked = 0;
  std::size_t accepted = 0;
  std::vector<RateTuple> mismatches;

  bool pass() const { return mismatches.empty(); }
};

/// build_layered accepts (n, k, mu, t, rho) exactly when k + mu + 2t + rho <= n,
/// for every n <= n_max and every k, mu, t, rho in [0, n].
RateGateReport sweep_rate_gate(std::size_t n_max);

}  // namespace rankcrypt::verify
