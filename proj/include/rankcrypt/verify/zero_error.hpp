// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "rankcrypt/verify/encoder.hpp"

namespace rankcrypt::verify {

/// Two messages whose fan-out sets meet: A x1 + z1 = y = A x2 + z2.
struct CollisionWitness {
  ExtVector s1, s2;
  ExtVector x1, x2;
  BaseMatrix a;
  ExtVector y;
  ExtVector z1, z2;
};

/// Checks the witness against the channel model: s1 != s2, rank A >= n - rho,
/// rank z1, rank z2 <= t and both equations hold. Encoder membership of
/// x1 and x2 is the caller's business.
bool witness_holds(const CollisionWitness& w, std::size_t t, std::size_t rho);

enum class TransferSweep {
  RowSpaces,  // one A per row space; collisions are invariant under A -> P A
  All,        // every A with rank >= n - rho
};

struct ZeroErrorReport {
  std::size_t t = 0;
  std::size_t rho = 0;
  bool pass = true;
  std::size_t transfer_matrices = 0;
  std::size_t error_patterns = 0;
  std::optional<CollisionWitness> witness;
};

/// Fan-out sets {(A, A x + z)} of distinct messages are pairwise disjoint over
/// every A with rank >= n - rho and every z with rank weight <= t.
ZeroErrorReport check_zero_error(const EnumerableEncoder& enc, std::size_t t, std::size_t rho,
                                 TransferSweep sweep = TransferSweep::RowSpaces);

struct TradeoffReport {
  std::size_t t = 0;
  std::size_t rho = 0;
  bool pass = true;
  std::vector<ZeroErrorReport> entries;  // every (t', rho') with 2t' + rho' <= 2t + rho
};

TradeoffReport check_tradeoff(const EnumerableEncoder& enc, std::size_t t, std::size_t rho);

/// Ambiguous output for a code with distance d <= 2t + rho: x2 - x1 is a
/// minimum-weight codeword, A annihilates min(rho, d) dimensions of its
/// column space and the remaining rank is split between z1 and z2.
/// Empty when d > 2t + rho.
std::optional<CollisionWitness> ambiguity_witness(const ExtMatrix& generator, std::size_t t,
                                                  std::size_t rho);

}  // namespace rankcrypt::verify
