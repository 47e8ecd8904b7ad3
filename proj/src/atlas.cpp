#include "detourlab/atlas.hpp"

#include <vector>

#include "detourlab/error.hpp"

namespace detourlab {

Graph split_vertex(const Graph& g, int x) {
  check_vertex(g, x);
  const int n = g.order();
  const int k = g.degree(x);
  const int order = n - 1 + k;
  if (order > kMaxOrder) throw Error(ErrorKind::kOrderCapExceeded, "split result exceeds the order cap");

  auto shifted = [x](int v) { return v > x ? v - 1 : v; };
  std::vector<Edge> out;
  for (auto [u, v] : edges(g)) {
    if (u != x && v != x) out.emplace_back(shifted(u), shifted(v));
  }
  int leaf = n - 1;
  for_each_vertex(g.neighbors(x), [&](int y) { out.emplace_back(shifted(y), leaf++); });
  return graph_from_edges(order, out);
}

NamedGraph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return {"petersen", graph_from_edges(10, e), {"petersen", std::nullopt, std::nullopt}};
}

NamedGraph flower_snark(int k) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorKind::kInvalidParameter, "flower snark needs odd k >= 3, got " + std::to_string(k));
  }
  if (4 * k > kMaxOrder) throw Error(ErrorKind::kOrderCapExceeded, "flower snark order exceeds the cap");
  auto t = [](int i) { return i; };
  auto u = [k](int i) { return k + i; };
  auto v = [k](int i) { return 2 * k + i; };
  auto w = [k](int i) { return 3 * k + i; };
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(t(i), u(i));
    e.emplace_back(t(i), v(i));
    e.emplace_back(t(i), w(i));
    e.emplace_back(u(i), u((i + 1) % k));
  }
  // Outer 2k-cycle v_0 .. v_{k-1} w_0 .. w_{k-1} v_0.
  for (int i = 0; i + 1 < k; ++i) {
    e.emplace_back(v(i), v(i + 1));
    e.emplace_back(w(i), w(i + 1));
  }
  e.emplace_back(v(k - 1), w(0));
  e.emplace_back(w(k - 1), v(0));
  return {"J" + std::to_string(k), graph_from_edges(4 * k, e), {"flower-snark", k, std::nullopt}};
}

NamedGraph coxeter() {
  std::vector<Edge> e;
  for (int i = 0; i < 7; ++i) {
    e.emplace_back(i, (i + 1) % 7);
    e.emplace_back(7 + i, 7 + (i + 2) % 7);
    e.emplace_back(14 + i, 14 + (i + 3) % 7);
    e.emplace_back(21 + i, i);
    e.emplace_back(21 + i, 7 + i);
    e.emplace_back(21 + i, 14 + i);
  }
  return {"coxeter", graph_from_edges(28, e), {"coxeter", std::nullopt, std::nullopt}};
}

NamedGraph pr(int x) {
  NamedGraph base = petersen();
  return {"pr", split_vertex(base.graph, x), {"petersen", std::nullopt, x}};
}

NamedGraph j_split(int k, int x) {
  if (k < 5) throw Error(ErrorKind::kInvalidParameter, "split flower snark needs odd k >= 5");
  NamedGraph base = flower_snark(k);
  return {"J" + std::to_string(k) + "s", split_vertex(base.graph, x), {"flower-snark", k, x}};
}

NamedGraph coxeter_split(int x) {
  NamedGraph base = coxeter();
  return {"coxeter-split", split_vertex(base.graph, x), {"coxeter", std::nullopt, x}};
}

NamedGraph from_provenance(const Provenance& p) {
  NamedGraph base;
  if (p.base == "petersen") {
    base = petersen();
  } else if (p.base == "coxeter") {
    base = coxeter();
  } else if (p.base == "flower-snark" && p.k) {
    base = flower_snark(*p.k);
  } else {
    throw Error(ErrorKind::kInvalidParameter, "unknown construction '" + p.base + "'");
  }
  if (!p.split_vertex) return base;
  if (p.base == "petersen") return pr(*p.split_vertex);
  if (p.base == "coxeter") return coxeter_split(*p.split_vertex);
  return j_split(*p.k, *p.split_vertex);
}

}  // namespace detourlab
