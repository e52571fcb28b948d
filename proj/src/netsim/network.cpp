// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/netsim/network.hpp"

#include <string>

#include "rankcrypt/linalg/algorithms.hpp"
#include "rankcrypt/rng.hpp"

namespace rankcrypt::netsim {

NetworkInstance::NetworkInstance(Topology topology, gf::TowerPtr tower, std::size_t n,
                                 BaseMatrix local, BaseMatrix injection)
    : topology_(std::move(topology)),
      tower_(std::move(tower)),
      n_(n),
      k_(std::move(local)),
      m_(std::move(injection)) {
  const std::size_t e = topology_.edges().size();
  require(k_.rows() == e && k_.cols() == e, ErrorCode::ShapeMismatch, "K must be |E| x |E|");
  require(m_.rows() == e && m_.cols() == n_, ErrorCode::ShapeMismatch, "M must be |E| x n");
  f_ = linalg::invert(BaseMatrix::identity(tower_, e) - k_);
  c_ = f_ * m_;
  receivers_ = topology_.receivers();
}

BaseMatrix NetworkInstance::coding_rows(std::span<const std::size_t> edges) const {
  for (std::size_t i : edges) {
    require(i < edge_count(), ErrorCode::UnknownEdge, "unknown edge index " + std::to_string(i));
  }
  return linalg::select_rows(c_, edges);
}

BaseMatrix NetworkInstance::transfer_rows(std::span<const std::size_t> edges) const {
  for (std::size_t i : edges) {
    require(i < edge_count(), ErrorCode::UnknownEdge, "unknown edge index " + std::to_string(i));
  }
  return linalg::select_rows(f_, edges);
}

NetworkInstance realize(const Topology& topology, gf::TowerPtr tower, std::size_t n,
                        std::uint64_t seed) {
  require(tower != nullptr, ErrorCode::InvalidArgument, "missing field tower");
  require(n >= 1, ErrorCode::InvalidArgument, "batch size must be positive");
  const auto& edges = topology.edges();
  const std::size_t e = edges.size();
  const std::uint32_t q = tower->q();
  BaseMatrix k(tower, e, e);
  BaseMatrix m(tower, e, n);
  Rng rng(seed);
  std::size_t source_edge = 0;
  for (std::size_t i = 0; i < e; ++i) {
    const std::vector<std::size_t> in = topology.incoming(edges[i].tail);
    if (topology.mode() == CodingMode::Routing) {
      if (edges[i].tail == topology.source()) {
        m(i, source_edge % n) = 1;
        ++source_edge;
      } else if (!in.empty()) {
        k(i, in.front()) = 1;
      }
      continue;
    }
    if (edges[i].tail == topology.source()) {
      for (std::size_t c = 0; c < n; ++c) m(i, c) = static_cast<Elem>(rng.below(q));
    }
    for (std::size_t j : in) {
      k(i, j) = topology.mode() == CodingMode::Nonzero ? static_cast<Elem>(1 + rng.below(q - 1))
                                                       : static_cast<Elem>(rng.below(q));
    }
  }
  return NetworkInstance(topology, std::move(tower), n, std::move(k), std::move(m));
}

std::size_t rank_deficiency(const NetworkInstance& net) {
  require(!net.receivers().empty(), ErrorCode::NoReceivers, "network declares no receivers");
  std::size_t worst = net.n();
  for (const auto& r : net.receivers()) {
    worst = std::min(worst, linalg::rank(net.coding_rows(r)));
  }
  return net.n() - worst;
}

std::size_t row_weight(const BaseMatrix& z) {
  std::size_t w = 0;
  for (std::size_t r = 0; r < z.rows(); ++r) {
    for (Elem v : z.row(r)) {
      if (v != 0) {
        ++w;
        break;
      }
    }
  }
  return w;
}

void check_action(const NetworkInstance& net, const AdversaryAction& action, std::size_t mu,
                  std::size_t t) {
  require(action.wiretap.size() <= mu, ErrorCode::ParameterViolation,
          "wiretap set larger than mu");
  for (std::size_t i : action.wiretap) {
    require(i < net.edge_count(), ErrorCode::UnknownEdge, "unknown edge index " + std::to_string(i));
  }
  if (action.injection.rows() == 0) return;
  require(action.injection.rows() == net.edge_count(), ErrorCode::ShapeMismatch,
          "injection must have one row per edge");
  require(row_weight(action.injection) <= t, ErrorCode::ParameterViolation,
          "injection touches more than t edges");
}

BaseMatrix transmit(const NetworkInstance& net, const BaseMatrix& x, const AdversaryAction& action,
                    std::size_t receiver) {
  require(receiver < net.receivers().size(), ErrorCode::InvalidArgument, "unknown receiver");
  require(x.rows() == net.n(), ErrorCode::ShapeMismatch, "X must have n rows");
  const auto& r = net.receivers()[receiver];
  BaseMatrix y = net.coding_rows(r) * x;
  if (action.injection.rows() != 0) {
    require(action.injection.rows() == net.edge_count() && action.injection.cols() == x.cols(),
            ErrorCode::ShapeMismatch, "injection must be |E| x packet length");
    y = y + net.transfer_rows(r) * action.injection;
  }
  return y;
}

BaseMatrix eavesdrop(const NetworkInstance& net, const BaseMatrix& x,
                     std::span<const std::size_t> edges) {
  require(x.rows() == net.n(), ErrorCode::ShapeMismatch, "X must have n rows");
  return net.coding_rows(edges) * x;
}

ReducedObservation receiver_reduce(const BaseMatrix& c_r, const BaseMatrix& y) {
  require(c_r.rows() == y.rows(), ErrorCode::ShapeMismatch, "C_R and Y row counts differ");
  const std::size_t n = c_r.cols();
  const auto& tower = c_r.tower();
  std::vector<std::size_t> kept;
  BaseMatrix basis(tower, 0, n);
  for (std::size_t i = 0; i < c_r.rows() && kept.size() < n; ++i) {
    BaseMatrix grown = linalg::vstack(basis, linalg::row_range(c_r, i, i + 1));
    if (linalg::rank(grown) > kept.size()) {
      kept.push_back(i);
      basis = std::move(grown);
    }
  }
  BaseMatrix sel(tower, n, c_r.rows());
  for (std::size_t r = 0; r < kept.size(); ++r) sel(r, kept[r]) = 1;
  return {sel * c_r, sel * y, sel};
}

BaseMatrix lift_headers(const BaseMatrix& x) {
  return linalg::hstack(BaseMatrix::identity(x.tower(), x.rows()), x);
}

}  // namespace rankcrypt::netsim
