#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "detourlab/atlas.hpp"
#include "detourlab/error.hpp"
#include "detourlab/paths.hpp"
#include "detourlab/properties.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace detourlab;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kIo;
}

// Saturation straight from the definition, with the naive longest-path oracle.
bool saturated_oracle(const Graph& g) {
  const int tau = oracle::longest_path(g);
  for (const auto& [u, v] : nonedges(g)) {
    if (oracle::longest_path(add_edge(g, u, v)) <= tau) return false;
  }
  return true;
}

bool has_degree2(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) return true;
  }
  return false;
}

bool is_spanning_subgraph(const Graph& small, const Graph& big) {
  if (small.order() != big.order()) return false;
  for (const auto& [u, v] : edges(small)) {
    if (!big.adjacent(u, v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_detour_saturated examples") {
  const auto k5 = is_detour_saturated(fixtures::complete(5));
  CHECK(k5.verdict);
  CHECK(to_string(k5.property) == "detour-saturated");

  const auto p = is_detour_saturated(pr().graph);
  CHECK(p.verdict);
  REQUIRE(std::holds_alternative<VertexPath>(p.witness));
  CHECK(std::get<VertexPath>(p.witness).order() == 10);

  const auto c5 = is_detour_saturated(fixtures::cycle(5));
  CHECK(!c5.verdict);
  REQUIRE(std::holds_alternative<FailingNonedge>(c5.witness));
  CHECK(std::get<FailingNonedge>(c5.witness).edge == Edge{0, 2});

  for (int x = 0; x < 28; x += 9) CHECK(is_detour_saturated(j_split(7, x).graph).verdict);
}

TEST_CASE("empty graphs are detour-saturated, and so is K1") {
  CHECK(is_detour_saturated(Graph::empty(3)).verdict);
  CHECK(is_detour_saturated(Graph::empty(1)).verdict);
}

TEST_CASE("required-edge check equals full recomputation and the naive definition") {
  std::mt19937_64 rng(2718);
  int positives = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.1 + 0.85 * static_cast<double>(rng() % 100) / 100.0);
    const auto fast = is_detour_saturated(g, SaturationCheck::kRequiredEdge);
    const auto full = is_detour_saturated(g, SaturationCheck::kFullRecompute);
    CHECK(fast.verdict == full.verdict);
    CHECK(fast.witness == full.witness);
    CHECK(fast.verdict == saturated_oracle(g));
    if (fast.verdict) {
      ++positives;
      if (has_degree2(g)) CHECK(girth(g) == Girth::finite(3));
    } else {
      REQUIRE(std::holds_alternative<FailingNonedge>(fast.witness));
      const Edge e = std::get<FailingNonedge>(fast.witness).edge;
      CHECK(!g.adjacent(e.first, e.second));
      CHECK(oracle::longest_path(add_edge(g, e.first, e.second)) == oracle::longest_path(g));
      // Lexicographically first: every earlier nonedge raises tau.
      for (const auto& f : nonedges(g)) {
        if (f == e) break;
        CHECK(oracle::longest_path(add_edge(g, f.first, f.second)) > oracle::longest_path(g));
      }
    }
  }
  CHECK(positives > 50);
}

TEST_CASE("hamiltonicity family on Petersen") {
  const Graph g = petersen().graph;
  CHECK(!is_hamiltonian(g).verdict);
  CHECK(is_hypohamiltonian(g).verdict);
  CHECK(is_maximally_nonhamiltonian(g).verdict);
  CHECK(is_maximal_hypohamiltonian(g).verdict);
  // Independent confirmation over all deletions and nonedges.
  for (int v = 0; v < 10; ++v) CHECK(oracle::hamiltonian(delete_vertex(g, v)));
  CHECK(nonedges(g).size() == 30);
  for (const auto& [u, v] : nonedges(g)) CHECK(oracle::hamiltonian(add_edge(g, u, v)));
}

TEST_CASE("hamiltonicity family on J5 and Coxeter") {
  CHECK(is_maximal_hypohamiltonian(flower_snark(5).graph).verdict);
  CHECK(is_maximal_hypohamiltonian(coxeter().graph).verdict);
}

TEST_CASE("a hamiltonian graph fails every nonhamiltonian predicate with a cycle witness") {
  const Graph c4 = fixtures::cycle(4);
  const auto h = is_hamiltonian(c4);
  CHECK(h.verdict);
  REQUIRE(std::holds_alternative<VertexCycle>(h.witness));
  for (const auto& r : {is_hypohamiltonian(c4), is_maximally_nonhamiltonian(c4), is_maximal_hypohamiltonian(c4)}) {
    CHECK(!r.verdict);
    REQUIRE(std::holds_alternative<VertexCycle>(r.witness));
    CHECK(oracle::valid_hamilton_cycle(c4, std::get<VertexCycle>(r.witness).vertices));
  }
}

TEST_CASE("counterexample witnesses for the nonhamiltonian predicates") {
  // K_{2,3}: nonhamiltonian. Deleting a degree-3 vertex leaves K_{1,3}.
  const Graph k23 = graph_from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  const auto hypo = is_hypohamiltonian(k23);
  CHECK(!hypo.verdict);
  REQUIRE(std::holds_alternative<FailingVertex>(hypo.witness));
  CHECK(std::get<FailingVertex>(hypo.witness).vertex == 0);

  // Adding 0-1 leaves the two sides unbalanced; still nonhamiltonian.
  const auto maxi = is_maximally_nonhamiltonian(k23);
  CHECK(!maxi.verdict);
  REQUIRE(std::holds_alternative<FailingNonedge>(maxi.witness));
  CHECK(std::get<FailingNonedge>(maxi.witness).edge == Edge{0, 1});
  CHECK(!oracle::hamiltonian(add_edge(k23, 0, 1)));

  CHECK(!is_maximal_hypohamiltonian(k23).verdict);
}

TEST_CASE("hamiltonicity predicates reject tiny graphs") {
  CHECK(kind_of([] { is_hamiltonian(fixtures::path(2)); }) == ErrorKind::kTooSmall);
  CHECK(kind_of([] { is_hypohamiltonian(Graph::empty(1)); }) == ErrorKind::kTooSmall);
  CHECK(kind_of([] { is_maximally_nonhamiltonian(Graph::empty(2)); }) == ErrorKind::kTooSmall);
  CHECK(kind_of([] { is_maximal_hypohamiltonian(Graph::empty(0)); }) == ErrorKind::kTooSmall);
}

TEST_CASE("maximal hypohamiltonian is the conjunction") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const bool both = !oracle::hamiltonian(g) && is_hypohamiltonian(g).verdict && is_maximally_nonhamiltonian(g).verdict;
    CHECK(is_maximal_hypohamiltonian(g).verdict == both);
    CHECK(is_hamiltonian(g).verdict == oracle::hamiltonian(g));
  }
}

TEST_CASE("saturate examples") {
  CHECK(saturate(fixtures::complete(4)) == fixtures::complete(4));
  CHECK(saturate(fixtures::path(3)) == fixtures::complete(3));
  CHECK(saturate(Graph::empty(3)) == Graph::empty(3));
}

TEST_CASE("saturate yields a spanning detour-saturated supergraph with the same tau") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
    const Graph h = saturate(g);
    CHECK(is_spanning_subgraph(g, h));
    CHECK(oracle::longest_path(h) == oracle::longest_path(g));
    CHECK(saturated_oracle(h));
  }
}

TEST_CASE("saturate matches the restart-after-each-addition procedure") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.35);
    const int tau = oracle::longest_path(g);
    Graph h = g;
    for (bool added = true; added;) {
      added = false;
      for (const auto& [u, v] : nonedges(h)) {
        const Graph next = add_edge(h, u, v);
        if (oracle::longest_path(next) == tau) {
          h = next;
          added = true;
          break;
        }
      }
    }
    CHECK(saturate(g) == h);
  }
}

TEST_CASE("splitting a maximal hypohamiltonian graph gives a saturated graph with tau equal to its order") {
  const std::vector<NamedGraph> bases{petersen(), flower_snark(5), flower_snark(7), flower_snark(9), coxeter()};
  for (const auto& base : bases) {
    CAPTURE(base.name);
    REQUIRE(is_maximal_hypohamiltonian(base.graph).verdict);
    for (int x = 0; x < base.graph.order(); ++x) {
      if (base.graph.degree(x) != 3) continue;
      const Graph s = split_vertex(base.graph, x);
      const auto report = is_detour_saturated(s);
      CHECK(report.verdict);
      CHECK(detour_order(s).tau == base.graph.order());
    }
  }
}
