#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detourlab/graph.hpp"
#include "detourlab/iso.hpp"

namespace detourlab {

/// Declarative constraints for an exhaustive search.
struct SearchSpec {
  int order_min = 1;
  int order_max = 1;
  /// Hereditary; enforced while graphs are grown.
  bool triangle_free = false;
  /// Girth must equal this value at the emitted order. Values >= 4 require
  /// triangle_free; cycles shorter than the value are excluded while growing.
  std::optional<int> girth_exact;
  /// Drop emitted graphs that have a vertex of degree 2. Only valid together
  /// with triangle_free: a detour-saturated graph with a degree-2 vertex has
  /// a triangle.
  bool forbid_degree2 = false;
  /// Forests have no girth and are detour-saturated in abundance (every
  /// edgeless graph is); search hits exclude them unless this is set.
  /// Enumeration is unaffected.
  bool include_forests = false;
  std::optional<std::chrono::milliseconds> budget;
  int threads = 1;
  std::optional<std::string> checkpoint_path;
};

/// Throws Error(kInvalidSpec) when the constraints are inconsistent.
void validate(const SearchSpec& spec);

/// Hash of the fields that determine the search space (not threads, budget
/// or checkpoint location).
std::uint64_t spec_hash(const SearchSpec& spec);

/// Order at which the space is cut into independent work units.
int unit_order(const SearchSpec& spec);

/// Calls `visit` once per isomorphism class of graphs with order in
/// [order_min, order_max] that satisfy the constraints, in a deterministic
/// order. Each graph is passed in canonical form.
void enumerate(const SearchSpec& spec, const std::function<void(const Graph&)>& visit);

struct SearchHit {
  std::string graph6;
  int order = 0;
  int size = 0;
  Girth girth = Girth::acyclic();
  int tau = 0;
  bool connected = false;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct OrderCount {
  /// Isomorphism classes at this order that passed the structural filters
  /// and were tested for detour-saturation.
  std::uint64_t examined = 0;
  std::uint64_t hits = 0;

  friend bool operator==(const OrderCount&, const OrderCount&) = default;
};

struct SearchOutcome {
  /// Sorted by (order, size, canonical graph6).
  std::vector<SearchHit> hits;
  std::map<int, OrderCount> counts;
  bool completed = false;
  std::size_t units_total = 0;
  std::size_t units_done = 0;
};

struct SearchOptions {
  /// Receives hits in work-unit order, independent of thread count.
  std::function<void(const SearchHit&)> on_hit;
  /// Mirror of the hit stream, one JSON object per line.
  std::optional<std::string> hits_jsonl_path;
  /// Stop cleanly after this many units have completed in this run.
  std::optional<std::size_t> stop_after_units;
};

/// Every emitted graph that is detour-saturated, each hit re-verified by
/// full detour recomputation over all nonedges. Resumes from
/// spec.checkpoint_path when that file exists.
SearchOutcome search_detour_saturated(const SearchSpec& spec, const SearchOptions& options = {});

}  // namespace detourlab
