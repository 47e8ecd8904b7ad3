#pragma once

#include <optional>
#include <string>

#include "detourlab/graph.hpp"

namespace detourlab {

/// Parameters a named graph was built from; rebuilding from them yields the
/// same labelled graph.
struct Provenance {
  std::string base;
  std::optional<int> k;
  std::optional<int> split_vertex;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct NamedGraph {
  std::string name;
  Graph graph;
  Provenance provenance;
};

/// Replaces x (neighbours y1 < ... < yk) by k new leaves x1..xk, xi adjacent
/// to yi only. The other vertices keep their relative order and the leaves
/// take the k highest ids.
Graph split_vertex(const Graph& g, int x);

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
NamedGraph petersen();

/// Isaacs flower snark J_k for odd k >= 3, order 4k. Vertex blocks:
/// t_i = i, u_i = k+i, v_i = 2k+i, w_i = 3k+i.
NamedGraph flower_snark(int k);

/// Coxeter graph: 7-cycles a_i = i (step 1), b_i = 7+i (step 2),
/// c_i = 14+i (step 3), hubs d_i = 21+i joined to a_i, b_i, c_i.
NamedGraph coxeter();

/// Petersen graph split at x.
NamedGraph pr(int x = 0);
/// J_k split at x, odd k >= 5.
NamedGraph j_split(int k, int x);
NamedGraph coxeter_split(int x);

/// Rebuilds a named graph from its provenance; throws kInvalidParameter for
/// an unknown base.
NamedGraph from_provenance(const Provenance& p);

}  // namespace detourlab
