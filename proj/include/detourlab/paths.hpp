#pragma once

#include <optional>
#include <vector>

#include "detourlab/graph.hpp"

namespace detourlab {

/// Ordered distinct vertices, consecutive ones adjacent. Its order is the
/// number of vertices, not edges.
struct VertexPath {
  std::vector<int> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const VertexPath&, const VertexPath&) = default;
};

/// Cyclic vertex sequence; the last vertex is adjacent to the first.
struct VertexCycle {
  std::vector<int> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const VertexCycle&, const VertexCycle&) = default;
};

struct DetourResult {
  int tau = 0;
  VertexPath witness;
};

/// Exact detour order (vertex count of a longest path) with a witness.
/// Throws kEmptyGraph on the order-0 graph.
DetourResult detour_order(const Graph& g);

/// A path on exactly `length` vertices that uses `required_edge` when given,
/// or nullopt if none exists (including length > order).
/// Throws kInvalidParameter for length < 1 and kInvalidEdge when the required
/// pair is not an edge of `g`.
std::optional<VertexPath> has_path_of_order(const Graph& g, int length,
                                            std::optional<Edge> required_edge = std::nullopt);

/// Throws kTooSmall for order < 3.
std::optional<VertexCycle> has_hamilton_cycle(const Graph& g);

/// Hamilton cycle that traverses the edge `through`. Throws kInvalidEdge if
/// it is not an edge, kTooSmall for order < 3.
std::optional<VertexCycle> hamilton_cycle_through(const Graph& g, Edge through);

/// Upper bound on the detour order from component sizes and low-degree vertices.
int detour_upper_bound(const Graph& g);

}  // namespace detourlab
