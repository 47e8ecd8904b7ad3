#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace detourlab {

/// Hard cap on graph order. One adjacency row fits a single 64-bit word.
inline constexpr int kMaxOrder = 64;

/// Set of vertex ids as a bitmask; bit v is vertex v.
using VertexSet = std::uint64_t;

using Edge = std::pair<int, int>;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_n(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int count(VertexSet s) { return std::popcount(s); }

/// Lowest member of a non-empty set.
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls `fn(v)` for every member of `s` in ascending order.
template <typename Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

/// Undirected simple graph on vertices 0..order()-1. Immutable once built;
/// the free functions below return modified copies.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  static Graph empty(int n);

  /// Builds from adjacency rows, checking symmetry, loops and range.
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  int order() const { return n_; }
  int size() const;

  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  int degree(int v) const { return count(neighbors(v)); }
  VertexSet vertices() const { return first_n(n_); }

  std::span<const VertexSet> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v) {
      if (a.rows_[static_cast<std::size_t>(v)] != b.rows_[static_cast<std::size_t>(v)]) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
};

/// Length of a shortest cycle, or the acyclic sentinel for forests.
class Girth {
 public:
  static Girth acyclic() { return Girth{0}; }
  static Girth finite(int length) { return Girth{length}; }

  bool is_acyclic() const { return length_ == 0; }
  /// Only meaningful when !is_acyclic().
  int value() const { return length_; }

  std::string to_string() const;

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  explicit Girth(int length) : length_(length) {}
  int length_;
};

Graph graph_from_edges(int n, std::span<const Edge> edges);
Graph graph_from_edges(int n, std::initializer_list<Edge> edges);

Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);
/// Removes v and shifts every higher id down by one.
Graph delete_vertex(const Graph& g, int v);
/// Appends one isolated vertex with id order().
Graph add_vertex(const Graph& g);
/// Relabels so that vertex v of `g` becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);
/// Subgraph induced by `keep`, vertices renumbered in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph complement(const Graph& g);

std::vector<Edge> edges(const Graph& g);
/// Pairs u < v that are not edges, in lexicographic order.
std::vector<Edge> nonedges(const Graph& g);

Girth girth(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
/// Vertices reachable from `from` inside `allowed` (from must be in allowed).
VertexSet reachable(const Graph& g, int from, VertexSet allowed);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_regular(const Graph& g, int degree);

void check_vertex(const Graph& g, int v);

}  // namespace detourlab
