#include "detourlab/graph.hpp"

#include <algorithm>
#include <limits>

#include "detourlab/error.hpp"

namespace detourlab {

namespace {

void check_order(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidParameter, "negative order");
  if (n > kMaxOrder) {
    throw Error(ErrorKind::kOrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph Graph::empty(int n) {
  check_order(n);
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::kInvalidParameter, "row count does not match order");
  }
  Graph g;
  g.n_ = n;
  const VertexSet all = first_n(n);
  for (int v = 0; v < n; ++v) {
    VertexSet row = rows[static_cast<std::size_t>(v)];
    if ((row & ~all) != 0) throw Error(ErrorKind::kInvalidVertex, "adjacency bit out of range");
    if ((row & bit(v)) != 0) throw Error(ErrorKind::kLoopRejected, "loop at vertex " + std::to_string(v));
    g.rows_[static_cast<std::size_t>(v)] = row;
  }
  for (int v = 0; v < n; ++v) {
    for_each_vertex(g.neighbors(v), [&](int w) {
      if (!g.adjacent(w, v)) throw Error(ErrorKind::kInvalidEdge, "asymmetric adjacency");
    });
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::string Girth::to_string() const {
  return is_acyclic() ? std::string("acyclic") : std::to_string(length_);
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorKind::kInvalidVertex,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(g.order() - 1));
  }
}

Graph graph_from_edges(int n, std::span<const Edge> edge_list) {
  check_order(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorKind::kInvalidVertex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorKind::kLoopRejected, "loop at vertex " + std::to_string(u));
    rows[static_cast<std::size_t>(u)] |= bit(v);
    rows[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph::from_rows(n, rows);
}

Graph graph_from_edges(int n, std::initializer_list<Edge> edge_list) {
  return graph_from_edges(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

Graph add_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw Error(ErrorKind::kLoopRejected, "loop at vertex " + std::to_string(u));
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  rows[static_cast<std::size_t>(u)] |= bit(v);
  rows[static_cast<std::size_t>(v)] |= bit(u);
  return Graph::from_rows(g.order(), rows);
}

Graph remove_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  rows[static_cast<std::size_t>(u)] &= ~bit(v);
  rows[static_cast<std::size_t>(v)] &= ~bit(u);
  return Graph::from_rows(g.order(), rows);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for_each_vertex(keep, [&](int v) { index[static_cast<std::size_t>(v)] = next++; });
  std::vector<VertexSet> rows(static_cast<std::size_t>(next), 0);
  for_each_vertex(keep, [&](int v) {
    VertexSet row = 0;
    for_each_vertex(g.neighbors(v) & keep, [&](int w) { row |= bit(index[static_cast<std::size_t>(w)]); });
    rows[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = row;
  });
  return Graph::from_rows(next, rows);
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

Graph add_vertex(const Graph& g) {
  check_order(g.order() + 1);
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  rows.push_back(0);
  return Graph::from_rows(g.order() + 1, rows);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::kInvalidParameter, "permutation length does not match order");
  }
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & bit(p)) != 0) {
      throw Error(ErrorKind::kInvalidParameter, "not a permutation");
    }
    seen |= bit(p);
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    VertexSet row = 0;
    for_each_vertex(g.neighbors(v), [&](int w) { row |= bit(perm[static_cast<std::size_t>(w)]); });
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
  }
  return Graph::from_rows(n, rows);
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    rows[static_cast<std::size_t>(v)] = g.vertices() & ~g.neighbors(v) & ~bit(v);
  }
  return Graph::from_rows(g.order(), rows);
}

std::vector<Edge> edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u) {
    for_each_vertex(g.neighbors(u) & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

std::vector<Edge> nonedges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u) {
    VertexSet missing = g.vertices() & ~first_n(u + 1) & ~g.neighbors(u);
    for_each_vertex(missing, [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Girth girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::array<int, kMaxOrder> dist{};
  std::array<int, kMaxOrder> parent{};
  std::array<int, kMaxOrder> queue{};
  for (int root = 0; root < n; ++root) {
    dist.fill(-1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    int head = 0;
    int tail = 0;
    queue[static_cast<std::size_t>(tail++)] = root;
    while (head < tail) {
      const int u = queue[static_cast<std::size_t>(head++)];
      const int du = dist[static_cast<std::size_t>(u)];
      // Cycles through root found at this depth cannot beat `best`.
      if (2 * du + 1 >= best) break;
      bool done = false;
      for_each_vertex(g.neighbors(u), [&](int w) {
        if (done) return;
        if (w == parent[static_cast<std::size_t>(u)]) return;
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue[static_cast<std::size_t>(tail++)] = w;
        } else {
          best = std::min(best, du + dist[static_cast<std::size_t>(w)] + 1);
          if (best == 3) done = true;
        }
      });
      if (best == 3) return Girth::finite(3);
    }
  }
  return best == std::numeric_limits<int>::max() ? Girth::acyclic() : Girth::finite(best);
}

VertexSet reachable(const Graph& g, int from, VertexSet allowed) {
  VertexSet seen = bit(from);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  VertexSet left = g.vertices();
  while (left != 0) {
    VertexSet comp = reachable(g, lowest(left), left);
    std::vector<int> members;
    for_each_vertex(comp, [&](int v) { members.push_back(v); });
    out.push_back(std::move(members));
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable(g, 0, g.vertices()) == g.vertices();
}

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : kMaxOrder;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

}  // namespace detourlab
