// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/verify/converse.hpp"

#include "rankcrypt/linalg/enumerate.hpp"
#include "rankcrypt/secrecy/layered.hpp"

namespace rankcrypt::verify {

ConverseReport converse_search_packet_length(std::uint32_t q, std::size_t n, std::size_t mu,
                                             std::size_t k, std::uint32_t m) {
  require(k <= n, ErrorCode::ParameterViolation, "k must not exceed n");
  const gf::TowerPtr tower = gf::FieldTower::create(q, m);
  ConverseReport rep;
  rep.q = q;
  rep.m = m;
  rep.n = n;
  rep.mu = mu;
  rep.k = k;
  const std::uint64_t total = linalg::checked_power(tower->size(), k * n, linalg::enumeration_cap(),
                                                    "parity-check enumeration");
  std::vector<Elem> digits(k * n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    linalg::unpack_index(idx, tower->size(), digits);
    ExtMatrix h(tower, k, n, digits);
    if (linalg::rank(h) != k) continue;
    ConverseCandidate c;
    const secrecy::CosetScheme scheme(h);
    const SecrecyVerdict v = check_universal_secrecy(coset_encoder(scheme), mu);
    c.h = std::move(h);
    c.secure = v.pass;
    c.witness = v.witness;
    c.leakage = v.witness_leakage;
    if (c.secure) ++rep.secure_count;
    rep.candidates.push_back(std::move(c));
  }
  return rep;
}

RateGateReport sweep_rate_gate(std::size_t n_max) {
  require(n_max >= 1 && n_max <= 6, ErrorCode::InvalidArgument, "rate gate sweep covers n <= 6");
  const gf::TowerPtr tower = gf::FieldTower::create(2, static_cast<std::uint32_t>(n_max));
  RateGateReport rep;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t mu = 0; mu <= n; ++mu) {
        for (std::size_t t = 0; t <= n; ++t) {
          for (std::size_t rho = 0; rho <= n; ++rho) {
            const bool expected = k + mu + 2 * t + rho <= n;
            bool accepted = true;
            try {
              secrecy::LayeredScheme::build(tower, n, k, mu, t, rho);
            } catch (const Error& e) {
              if (e.code() != ErrorCode::ParameterViolation) throw;
              accepted = false;
            }
            ++rep.checked;
            if (accepted) ++rep.accepted;
            if (accepted != expected) rep.mismatches.push_back({n, k, mu, t, rho});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace rankcrypt::verify
