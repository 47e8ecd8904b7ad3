#include "detourlab/properties.hpp"

#include "detourlab/error.hpp"

namespace detourlab {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const { return Clock::now() - start_; }

 private:
  Clock::time_point start_ = Clock::now();
};

void require_cycles_possible(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorKind::kTooSmall, "property needs at least 3 vertices");
}

// Graphs on fewer than 3 vertices have no cycles at all.
std::optional<VertexCycle> hamilton_cycle_or_none(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  return has_hamilton_cycle(g);
}

bool raises_detour(const Graph& g, Edge e, int tau, SaturationCheck method) {
  const Graph plus = add_edge(g, e.first, e.second);
  if (method == SaturationCheck::kFullRecompute) return detour_order(plus).tau > tau;
  // Any path of G+e longer than tau(G) must use e.
  return has_path_of_order(plus, tau + 1, e).has_value();
}

// Parts of the hamiltonicity family, given that G is already known to be
// nonhamiltonian. Return the first counterexample, if any.
Witness hypohamiltonian_failure(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (!hamilton_cycle_or_none(delete_vertex(g, v))) return FailingVertex{v};
  }
  return std::monostate{};
}

Witness maximally_nonhamiltonian_failure(const Graph& g) {
  for (Edge e : nonedges(g)) {
    const Graph plus = add_edge(g, e.first, e.second);
    // G is nonhamiltonian, so a Hamilton cycle of G+e must use e.
    if (!hamilton_cycle_through(plus, e)) return FailingNonedge{e};
  }
  return std::monostate{};
}

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::kDetourSaturated: return "detour-saturated";
    case Property::kHamiltonian: return "hamiltonian";
    case Property::kHypohamiltonian: return "hypohamiltonian";
    case Property::kMaximallyNonhamiltonian: return "maximally-nonhamiltonian";
    case Property::kMaximalHypohamiltonian: return "maximal-hypohamiltonian";
  }
  return "unknown";
}

PropertyReport is_detour_saturated(const Graph& g, SaturationCheck method) {
  Stopwatch clock;
  PropertyReport report{Property::kDetourSaturated, true, std::monostate{}, {}};
  const auto missing = nonedges(g);
  if (!missing.empty()) {
    const DetourResult base = detour_order(g);
    report.witness = base.witness;
    for (Edge e : missing) {
      if (!raises_detour(g, e, base.tau, method)) {
        report.verdict = false;
        report.witness = FailingNonedge{e};
        break;
      }
    }
  }
  report.elapsed = clock.elapsed();
  return report;
}

PropertyReport is_hamiltonian(const Graph& g) {
  require_cycles_possible(g);
  Stopwatch clock;
  PropertyReport report{Property::kHamiltonian, false, std::monostate{}, {}};
  if (auto cycle = has_hamilton_cycle(g)) {
    report.verdict = true;
    report.witness = std::move(*cycle);
  }
  report.elapsed = clock.elapsed();
  return report;
}

PropertyReport is_hypohamiltonian(const Graph& g) {
  require_cycles_possible(g);
  Stopwatch clock;
  PropertyReport report{Property::kHypohamiltonian, false, std::monostate{}, {}};
  if (auto cycle = has_hamilton_cycle(g)) {
    report.witness = std::move(*cycle);
  } else {
    report.witness = hypohamiltonian_failure(g);
    report.verdict = std::holds_alternative<std::monostate>(report.witness);
  }
  report.elapsed = clock.elapsed();
  return report;
}

PropertyReport is_maximally_nonhamiltonian(const Graph& g) {
  require_cycles_possible(g);
  Stopwatch clock;
  PropertyReport report{Property::kMaximallyNonhamiltonian, false, std::monostate{}, {}};
  if (auto cycle = has_hamilton_cycle(g)) {
    report.witness = std::move(*cycle);
  } else {
    report.witness = maximally_nonhamiltonian_failure(g);
    report.verdict = std::holds_alternative<std::monostate>(report.witness);
  }
  report.elapsed = clock.elapsed();
  return report;
}

PropertyReport is_maximal_hypohamiltonian(const Graph& g) {
  require_cycles_possible(g);
  Stopwatch clock;
  PropertyReport report{Property::kMaximalHypohamiltonian, false, std::monostate{}, {}};
  if (auto cycle = has_hamilton_cycle(g)) {
    report.witness = std::move(*cycle);
  } else {
    report.witness = hypohamiltonian_failure(g);
    if (std::holds_alternative<std::monostate>(report.witness)) {
      report.witness = maximally_nonhamiltonian_failure(g);
    }
    report.verdict = std::holds_alternative<std::monostate>(report.witness);
  }
  report.elapsed = clock.elapsed();
  return report;
}

Graph saturate(const Graph& g) {
  if (g.order() == 0) return g;
  const int tau = detour_order(g).tau;
  Graph h = g;
  // Adding edges never destroys a longer path through a later nonedge, so
  // nonedges already seen to raise tau keep raising it; one ordered pass
  // matches a scan that restarts after every addition.
  for (Edge e : nonedges(g)) {
    if (!raises_detour(h, e, tau, SaturationCheck::kRequiredEdge)) h = add_edge(h, e.first, e.second);
  }
  return h;
}

}  // namespace detourlab
