#include "detourlab/paths.hpp"

#include <algorithm>
#include <array>

#include "detourlab/error.hpp"

namespace detourlab {

namespace {

// Vertices of `within` with at most one neighbour in `within | extra`.
int count_low_degree(const Graph& g, VertexSet within, VertexSet extra) {
  const VertexSet host = within | extra;
  int low = 0;
  for_each_vertex(within, [&](int v) {
    if (count(g.neighbors(v) & host) <= 1) ++low;
  });
  return low;
}

VertexSet flood(const Graph& g, VertexSet seeds, VertexSet allowed) {
  VertexSet seen = seeds;
  VertexSet frontier = seeds;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Depth-first extension of simple paths at their tail, shared by the
// maximising and the fixed-length entry points. A path is accepted once it
// has at least `target_` vertices and, if a required edge is set, uses it.
// Maximising mode raises the target after every acceptance.
class PathEngine {
 public:
  PathEngine(const Graph& g, int target, bool maximize, int stop_at)
      : g_(g), all_(g.vertices()), target_(target), maximize_(maximize), stop_at_(stop_at) {}

  void require(Edge e) {
    req_a_ = e.first;
    req_b_ = e.second;
  }

  void run() {
    for (int s = 0; s < g_.order() && !done_; ++s) {
      start_ = s;
      path_[0] = s;
      len_ = 1;
      visited_ = bit(s);
      req_used_ = false;
      extend();
    }
  }

  const std::vector<int>& best() const { return best_; }

 private:
  bool has_requirement() const { return req_a_ >= 0; }

  // The required edge, once used, sits at the tail or inside the last
  // target_ vertices, so keeping that suffix keeps the edge.
  void accept() {
    const int keep = maximize_ ? len_ : target_;
    best_.assign(path_.begin() + (len_ - keep), path_.begin() + len_);
    if (!maximize_) {
      done_ = true;
      return;
    }
    target_ = len_ + 1;
    if (target_ > stop_at_) done_ = true;
  }

  void extend() {
    const int tail = path_[static_cast<std::size_t>(len_ - 1)];
    if (len_ >= target_ && (!has_requirement() || req_used_)) {
      accept();
      if (done_) return;
    }

    const VertexSet free = all_ & ~visited_;
    VertexSet next = g_.neighbors(tail) & free;
    if (next == 0) return;

    const bool pending = has_requirement() && !req_used_;
    if (pending && (tail == req_a_ || tail == req_b_)) {
      // The required edge must leave the tail now or never.
      const int other = tail == req_a_ ? req_b_ : req_a_;
      if ((next & bit(other)) == 0) return;
      next = bit(other);
    }

    const VertexSet reach = flood(g_, next, free);
    if (pending && tail != req_a_ && tail != req_b_ &&
        ((reach & bit(req_a_)) == 0 || (reach & bit(req_b_)) == 0)) {
      return;
    }
    // Every path vertex beyond the tail except the last needs two neighbours
    // among the reachable vertices and the tail.
    const int low = count_low_degree(g_, reach, bit(tail));
    const int bound = len_ + count(reach) - std::max(0, low - 1);
    if (bound < target_) return;
    // Paths are enumerated from their lower-id endpoint.
    if (((reach | bit(tail)) & ~first_n(start_)) == 0) return;

    for_each_vertex(next, [&](int v) {
      if (done_) return;
      const bool closes = pending && ((tail == req_a_ && v == req_b_) || (tail == req_b_ && v == req_a_));
      if (pending && !closes && (v == req_a_ || v == req_b_)) {
        const int other = v == req_a_ ? req_b_ : req_a_;
        if ((visited_ & bit(other)) != 0) return;
      }
      path_[static_cast<std::size_t>(len_)] = v;
      ++len_;
      visited_ |= bit(v);
      const bool saved = req_used_;
      if (closes) req_used_ = true;
      extend();
      req_used_ = saved;
      visited_ &= ~bit(v);
      --len_;
    });
  }

  const Graph& g_;
  const VertexSet all_;
  int target_;
  const bool maximize_;
  const int stop_at_;
  int req_a_ = -1;
  int req_b_ = -1;

  std::array<int, kMaxOrder> path_{};
  int len_ = 0;
  VertexSet visited_ = 0;
  int start_ = 0;
  bool req_used_ = false;
  bool done_ = false;
  std::vector<int> best_;
};

// Backtracking over Hamilton cycles anchored at `start_`. Unless the second
// vertex is forced, each cycle is reported in one orientation only
// (second vertex < last vertex).
class CycleEngine {
 public:
  CycleEngine(const Graph& g, int start, int forced_second)
      : g_(g), n_(g.order()), start_(start), forced_(forced_second) {}

  std::optional<VertexCycle> run() {
    path_[0] = start_;
    len_ = 1;
    visited_ = bit(start_);
    if (forced_ >= 0) {
      path_[1] = forced_;
      len_ = 2;
      visited_ |= bit(forced_);
    }
    if (!extend()) return std::nullopt;
    return VertexCycle{std::vector<int>(path_.begin(), path_.begin() + n_)};
  }

 private:
  bool extend() {
    const int tail = path_[static_cast<std::size_t>(len_ - 1)];
    if (len_ == n_) {
      if (!g_.adjacent(tail, start_)) return false;
      return forced_ >= 0 || path_[1] < tail;
    }
    const VertexSet free = g_.vertices() & ~visited_;
    VertexSet next = g_.neighbors(tail) & free;
    if (next == 0) return false;

    VertexSet closers = g_.neighbors(start_) & free;
    if (len_ >= 2 && forced_ < 0) closers &= ~first_n(path_[1] + 1);
    if (closers == 0) return false;

    // Each free vertex needs two cycle neighbours among free ∪ {tail, start}.
    // A free vertex with exactly two such neighbours fixes both cycle edges.
    const VertexSet host = free | bit(tail) | bit(start_);
    VertexSet forced_from_tail = 0;
    int forced_to_start = 0;
    bool dead = false;
    for_each_vertex(free, [&](int u) {
      if (dead) return;
      const VertexSet nb = g_.neighbors(u) & host;
      const int d = count(nb);
      if (d < 2) {
        dead = true;
      } else if (d == 2) {
        if ((nb & bit(tail)) != 0) forced_from_tail |= bit(u);
        if ((nb & bit(start_)) != 0) ++forced_to_start;
      }
    });
    if (dead) return false;
    if (len_ >= 2) {
      if (count(forced_from_tail) > 1 || forced_to_start > 1) return false;
      if (forced_from_tail != 0) next = forced_from_tail;
    }
    if (flood(g_, bit(lowest(free)), free) != free) return false;

    bool found = false;
    for_each_vertex(next, [&](int v) {
      if (found) return;
      path_[static_cast<std::size_t>(len_)] = v;
      ++len_;
      visited_ |= bit(v);
      found = extend();
      if (!found) {
        visited_ &= ~bit(v);
        --len_;
      }
    });
    return found;
  }

  const Graph& g_;
  const int n_;
  const int start_;
  const int forced_;
  std::array<int, kMaxOrder> path_{};
  int len_ = 0;
  VertexSet visited_ = 0;
};

void check_edge(const Graph& g, Edge e) {
  check_vertex(g, e.first);
  check_vertex(g, e.second);
  if (!g.adjacent(e.first, e.second)) {
    throw Error(ErrorKind::kInvalidEdge,
                "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is not an edge");
  }
}

}  // namespace

int detour_upper_bound(const Graph& g) {
  int best = 0;
  VertexSet left = g.vertices();
  while (left != 0) {
    const VertexSet comp = reachable(g, lowest(left), left);
    const int low = count_low_degree(g, comp, 0);
    best = std::max(best, count(comp) - std::max(0, low - 2));
    left &= ~comp;
  }
  return best;
}

DetourResult detour_order(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::kEmptyGraph, "detour order of the empty graph");
  PathEngine engine(g, 1, /*maximize=*/true, detour_upper_bound(g));
  engine.run();
  DetourResult result;
  result.witness.vertices = engine.best();
  result.tau = result.witness.order();
  return result;
}

std::optional<VertexPath> has_path_of_order(const Graph& g, int length, std::optional<Edge> required_edge) {
  if (length < 1) throw Error(ErrorKind::kInvalidParameter, "path order must be at least 1");
  if (required_edge) check_edge(g, *required_edge);
  if (length > g.order() || length > detour_upper_bound(g)) return std::nullopt;
  // A single vertex contains no edge.
  if (required_edge && length < 2) return std::nullopt;
  PathEngine engine(g, length, /*maximize=*/false, length);
  if (required_edge) engine.require(*required_edge);
  engine.run();
  if (engine.best().empty()) return std::nullopt;
  return VertexPath{engine.best()};
}

std::optional<VertexCycle> has_hamilton_cycle(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorKind::kTooSmall, "Hamilton cycles need at least 3 vertices");
  if (min_degree(g) < 2 || !is_connected(g)) return std::nullopt;
  int start = 0;
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) < g.degree(start)) start = v;
  }
  return CycleEngine(g, start, -1).run();
}

std::optional<VertexCycle> hamilton_cycle_through(const Graph& g, Edge through) {
  if (g.order() < 3) throw Error(ErrorKind::kTooSmall, "Hamilton cycles need at least 3 vertices");
  check_edge(g, through);
  if (min_degree(g) < 2 || !is_connected(g)) return std::nullopt;
  return CycleEngine(g, through.first, through.second).run();
}

}  // namespace detourlab
