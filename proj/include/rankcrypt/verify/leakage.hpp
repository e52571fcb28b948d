// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "rankcrypt/verify/encoder.hpp"

namespace rankcrypt::verify {

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  bool operator==(const Rational&) const = default;
};

/// Exact counts of (S, W = B X) over all messages and randomness.
struct JointTable {
  std::uint64_t messages = 0;
  std::uint64_t randomness = 0;
  std::vector<ExtVector> observations;  // distinct W, first-seen order
  std::vector<std::uint64_t> counts;    // row-major messages x observations

  std::uint64_t count(std::uint64_t s, std::size_t w) const {
    return counts[s * observations.size() + w];
  }
  std::uint64_t observation_total(std::size_t w) const;
  /// Pr(W = w | S = s) as a reduced fraction.
  Rational conditional(std::uint64_t s, std::size_t w) const;
};

JointTable joint_table(const EnumerableEncoder& enc, const ExtMatrix& b);
JointTable joint_table(const EnumerableEncoder& enc, const BaseMatrix& b);

/// I(S;W) in q^m-ary packets. The zero verdict comes from the exact
/// factorization test count(s,w) * N == count(s) * count(w). When every
/// nonzero cell has the same ratio q^e the value e/m is exact; otherwise only
/// the floating sum is available, good to error_bound.
struct LeakageReport {
  std::size_t observation_rows = 0;
  std::uint64_t messages = 0;
  std::uint64_t observations = 0;
  bool zero = false;
  bool exact = false;
  Rational packets;
  long double approx = 0;
  long double error_bound = 0;
};

LeakageReport leakage_from_table(const JointTable& table, const gf::FieldTower& f);
LeakageReport mutual_information(const EnumerableEncoder& enc, const ExtMatrix& b);
LeakageReport mutual_information(const EnumerableEncoder& enc, const BaseMatrix& b);

/// One reduced echelon basis per subspace of GF(q)^n with dimension in
/// [min_dim, max_dim], lowest dimension first.
std::vector<BaseMatrix> observation_representatives(const gf::TowerPtr& tower, std::size_t n,
                                                     std::size_t max_dim, std::size_t min_dim = 0);

struct SecrecyVerdict {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<BaseMatrix> witness;
  std::optional<LeakageReport> witness_leakage;
};

/// I(S; B X) == 0 for every GF(q) matrix B with at most mu rows, one B per
/// row space.
SecrecyVerdict check_universal_secrecy(const EnumerableEncoder& enc, std::size_t mu);

struct AdditivityVerdict {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<BaseMatrix> witness;
};

/// rank [H; B] == rank H + rank B for every GF(q) matrix B with at most mu
/// rows, one B per row space.
AdditivityVerdict check_rank_additivity(const ExtMatrix& h, std::size_t mu);

enum class CosetHypothesis { UniformCoset, UniformMessage, Both };

/// rank H + rank B - rank [H; B]. Uniform X within each coset makes it an
/// upper bound on I(S;W); a uniform message makes it a lower bound.
struct CosetLeakageBounds {
  std::optional<std::size_t> lower;
  std::optional<std::size_t> upper;
};
CosetLeakageBounds coset_leakage_bounds(const ExtMatrix& h, const ExtMatrix& b,
                                        CosetHypothesis mode);

}  // namespace rankcrypt::verify
