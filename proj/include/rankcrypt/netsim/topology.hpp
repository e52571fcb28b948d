// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace rankcrypt::netsim {

struct Edge {
  std::size_t tail;
  std::size_t head;
};

/// How non-source local coefficients are chosen.
enum class CodingMode {
  Random,   // uniform over GF(q)
  Nonzero,  // uniform over GF(q) \ {0}; source injection stays uniform
  Routing,  // source edges carry unit vectors, other edges copy their first input
};

/// Acyclic multigraph with unit-capacity edges. Edge indices follow the
/// order given at construction.
class Topology {
 public:
  Topology(std::size_t nodes, std::vector<Edge> edges, std::size_t source,
           std::vector<std::size_t> destinations, CodingMode mode = CodingMode::Random);

  std::size_t nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t source() const { return source_; }
  const std::vector<std::size_t>& destinations() const { return destinations_; }
  CodingMode mode() const { return mode_; }

  /// Edges sorted so every edge comes after the edges entering its tail.
  const std::vector<std::size_t>& edge_order() const { return edge_order_; }
  std::vector<std::size_t> incoming(std::size_t node) const;
  std::vector<std::size_t> outgoing(std::size_t node) const;
  /// Incoming edges of each destination, in destination order.
  std::vector<std::vector<std::size_t>> receivers() const;

  /// Source 0, relays 1..4, sinks 5 and 6; nine edges with bottleneck 3 -> 4.
  /// direct_links adds s -> t1 and s -> t2, lifting the min-cut to 3.
  static Topology butterfly(bool direct_links = false, CodingMode mode = CodingMode::Random);
  /// Two nodes joined by n parallel edges with routing coefficients (C = I).
  static Topology parallel(std::size_t n);

 private:
  std::size_t nodes_;
  std::vector<Edge> edges_;
  std::size_t source_;
  std::vector<std::size_t> destinations_;
  CodingMode mode_;
  std::vector<std::size_t> edge_order_;
};

}  // namespace rankcrypt::netsim
