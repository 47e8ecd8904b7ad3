#pragma once

#include <compare>
#include <string>
#include <vector>

#include "detourlab/graph.hpp"

namespace detourlab {

/// graph6 encoding of the canonical relabeling. Equal exactly when the
/// underlying graphs are isomorphic.
struct CanonicalCert {
  std::string bytes;

  friend bool operator==(const CanonicalCert&, const CanonicalCert&) = default;
  friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;
};

struct CanonicalLabeling {
  /// position[v] is the canonical label of input vertex v.
  std::vector<int> position;
  /// relabel(input, position).
  Graph form;
  /// Smallest vertex of v's orbit under the automorphisms met during the
  /// search. Equal entries imply the same automorphism orbit; the converse
  /// need not hold.
  std::vector<int> known_orbit;
  /// Cell of v in the coarsest equitable partition. Different entries imply
  /// different orbits.
  std::vector<int> refined_cell;
};

/// Individualisation-refinement with backtracking; selects the
/// lexicographically least adjacency rows over all leaves of the search tree.
CanonicalLabeling canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);
CanonicalCert canonical_cert(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace detourlab
