// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/netsim/topology.hpp"

#include <algorithm>
#include <string>

#include "rankcrypt/error.hpp"

namespace rankcrypt::netsim {

Topology::Topology(std::size_t nodes, std::vector<Edge> edges, std::size_t source,
                   std::vector<std::size_t> destinations, CodingMode mode)
    : nodes_(nodes),
      edges_(std::move(edges)),
      source_(source),
      destinations_(std::move(destinations)),
      mode_(mode) {
  require(source_ < nodes_, ErrorCode::InvalidArgument, "source node out of range");
  for (const Edge& e : edges_) {
    require(e.tail < nodes_ && e.head < nodes_, ErrorCode::InvalidArgument,
            "edge endpoint out of range");
  }
  for (std::size_t d : destinations_) {
    require(d < nodes_, ErrorCode::InvalidArgument, "destination node out of range");
  }

  // Kahn's algorithm over nodes.
  std::vector<std::size_t> indegree(nodes_, 0);
  for (const Edge& e : edges_) ++indegree[e.head];
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < nodes_; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Edge& e : edges_) {
      if (e.tail == order[i] && --indegree[e.head] == 0) order.push_back(e.head);
    }
  }
  require(order.size() == nodes_, ErrorCode::CyclicTopology, "topology contains a cycle");

  std::vector<std::size_t> position(nodes_);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  edge_order_.resize(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_order_[i] = i;
  std::stable_sort(edge_order_.begin(), edge_order_.end(), [&](std::size_t a, std::size_t b) {
    return position[edges_[a].tail] < position[edges_[b].tail];
  });

  std::vector<bool> reached(nodes_, false);
  reached[source_] = true;
  for (std::size_t i : edge_order_) {
    if (reached[edges_[i].tail]) reached[edges_[i].head] = true;
  }
  for (std::size_t d : destinations_) {
    require(reached[d], ErrorCode::Unreachable,
            "destination " + std::to_string(d) + " is not reachable from the source");
  }
}

std::vector<std::size_t> Topology::incoming(std::size_t node) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].head == node) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Topology::outgoing(std::size_t node) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].tail == node) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<std::size_t>> Topology::receivers() const {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t d : destinations_) out.push_back(incoming(d));
  return out;
}

Topology Topology::butterfly(bool direct_links, CodingMode mode) {
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4},
                             {1, 5}, {2, 6}, {4, 5}, {4, 6}};
  if (direct_links) {
    edges.push_back({0, 5});
    edges.push_back({0, 6});
  }
  return Topology(7, std::move(edges), 0, {5, 6}, mode);
}

Topology Topology::parallel(std::size_t n) {
  return Topology(2, std::vector<Edge>(n, Edge{0, 1}), 0, {1}, CodingMode::Routing);
}

}  // namespace rankcrypt::netsim
