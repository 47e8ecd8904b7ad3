#pragma once

#include <chrono>
#include <string_view>
#include <variant>

#include "detourlab/graph.hpp"
#include "detourlab/paths.hpp"

namespace detourlab {

enum class Property {
  kDetourSaturated,
  kHamiltonian,
  kHypohamiltonian,
  kMaximallyNonhamiltonian,
  kMaximalHypohamiltonian,
};

std::string_view to_string(Property p);

struct FailingNonedge {
  Edge edge;
  friend bool operator==(const FailingNonedge&, const FailingNonedge&) = default;
};

struct FailingVertex {
  int vertex;
  friend bool operator==(const FailingVertex&, const FailingVertex&) = default;
};

using Witness = std::variant<std::monostate, FailingNonedge, FailingVertex, VertexPath, VertexCycle>;

/// Outcome of one property check. A negative verdict on a universally
/// quantified property always carries the first counterexample.
struct PropertyReport {
  Property property;
  bool verdict = false;
  Witness witness;
  std::chrono::nanoseconds elapsed{0};
};

enum class SaturationCheck {
  /// Decide a path on tau+1 vertices through e in G+e.
  kRequiredEdge,
  /// Recompute tau(G+e) from scratch.
  kFullRecompute,
};

/// Yes iff every nonedge e gives tau(G+e) > tau(G). The witness is the detour
/// of G on success and the lexicographically first failing nonedge otherwise.
PropertyReport is_detour_saturated(const Graph& g, SaturationCheck method = SaturationCheck::kRequiredEdge);

PropertyReport is_hamiltonian(const Graph& g);
PropertyReport is_hypohamiltonian(const Graph& g);
PropertyReport is_maximally_nonhamiltonian(const Graph& g);
PropertyReport is_maximal_hypohamiltonian(const Graph& g);

/// Supergraph on the same vertices with the same detour order that is
/// detour-saturated. Adds tau-preserving nonedges in lexicographic order.
Graph saturate(const Graph& g);

}  // namespace detourlab
