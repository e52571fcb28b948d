// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "rankcrypt/linalg/matrix.hpp"
#include "rankcrypt/netsim/topology.hpp"

namespace rankcrypt::netsim {

using linalg::BaseMatrix;

/// A topology with its local coefficients drawn. Packets satisfy
/// P = K P + M X + Z, so P = F (M X + Z) with F = (I - K)^-1 and C = F M.
class NetworkInstance {
 public:
  NetworkInstance(Topology topology, gf::TowerPtr tower, std::size_t n, BaseMatrix local,
                  BaseMatrix injection);

  const Topology& topology() const { return topology_; }
  const gf::TowerPtr& tower() const { return tower_; }
  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return topology_.edges().size(); }
  const BaseMatrix& local() const { return k_; }
  const BaseMatrix& injection() const { return m_; }
  const BaseMatrix& coding() const { return c_; }
  const BaseMatrix& transfer() const { return f_; }
  const std::vector<std::vector<std::size_t>>& receivers() const { return receivers_; }

  BaseMatrix coding_rows(std::span<const std::size_t> edges) const;
  BaseMatrix transfer_rows(std::span<const std::size_t> edges) const;

 private:
  Topology topology_;
  gf::TowerPtr tower_;
  std::size_t n_;
  BaseMatrix k_;
  BaseMatrix m_;
  BaseMatrix f_;
  BaseMatrix c_;
  std::vector<std::vector<std::size_t>> receivers_;
};

/// Draws local coefficients uniformly from GF(q) (or routes, per the
/// topology's mode) with a generator seeded by seed.
NetworkInstance realize(const Topology& topology, gf::TowerPtr tower, std::size_t n,
                        std::uint64_t seed);

/// n - min over receivers of rank C_R.
std::size_t rank_deficiency(const NetworkInstance& net);

struct AdversaryAction {
  std::vector<std::size_t> wiretap;  // observed edges
  BaseMatrix injection;              // |E| x packet length; empty means no injection
};

/// Number of nonzero rows.
std::size_t row_weight(const BaseMatrix& z);

/// Throws unless |wiretap| <= mu, wiretap edges exist and wt(Z) <= t.
void check_action(const NetworkInstance& net, const AdversaryAction& action, std::size_t mu,
                  std::size_t t);

/// Y = C_R X + F_R Z for the receiver with the given index.
BaseMatrix transmit(const NetworkInstance& net, const BaseMatrix& x, const AdversaryAction& action,
                    std::size_t receiver);

/// W = C_I X.
BaseMatrix eavesdrop(const NetworkInstance& net, const BaseMatrix& x,
                     std::span<const std::size_t> edges);

struct ReducedObservation {
  BaseMatrix a;          // n x n, rank equal to rank C_R
  BaseMatrix y;          // n x packet length
  BaseMatrix selection;  // n x |R|
};

/// Keeps the rows of C_R that raise the rank (first come, first kept) and
/// pads with zero rows up to n.
ReducedObservation receiver_reduce(const BaseMatrix& c_r, const BaseMatrix& y);

/// [I X]
BaseMatrix lift_headers(const BaseMatrix& x);

}  // namespace rankcrypt::netsim
