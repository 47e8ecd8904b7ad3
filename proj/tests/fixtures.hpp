#pragma once

#include <vector>

#include "detourlab/graph.hpp"

namespace fixtures {

using detourlab::Edge;
using detourlab::Graph;

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return detourlab::graph_from_edges(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return detourlab::graph_from_edges(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return detourlab::graph_from_edges(n, e);
}

/// K_{1,k} with centre 0.
inline Graph star(int k) {
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return detourlab::graph_from_edges(k + 1, e);
}

}  // namespace fixtures
