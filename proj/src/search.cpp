#include "detourlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "detourlab/checkpoint.hpp"
#include "detourlab/error.hpp"
#include "detourlab/graph6.hpp"
#include "detourlab/paths.hpp"
#include "detourlab/properties.hpp"

namespace detourlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Constraints {
  int order_min = 1;
  int order_max = 1;
  // Shortest cycle allowed while growing; 3 means unconstrained.
  int min_cycle = 3;
  bool forbid_degree2 = false;
  std::optional<int> girth_exact;
};

Constraints constraints_of(const SearchSpec& spec) {
  Constraints c;
  c.order_min = spec.order_min;
  c.order_max = spec.order_max;
  c.min_cycle = spec.girth_exact.value_or(spec.triangle_free ? 4 : 3);
  c.forbid_degree2 = spec.forbid_degree2;
  c.girth_exact = spec.girth_exact;
  return c;
}

bool rows_less(const Graph& a, const Graph& b) {
  const auto ra = a.rows();
  const auto rb = b.rows();
  return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
}

// Non-hereditary filters, applied to graphs at the order they are emitted.
bool passes_emit_filters(const Graph& g, const Constraints& c) {
  if (c.forbid_degree2) {
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 2) return false;
    }
  }
  if (c.girth_exact) {
    const Girth gi = girth(g);
    if (gi.is_acyclic() || gi.value() != *c.girth_exact) return false;
  }
  return true;
}

// Canonical augmentation by one vertex. A child is kept iff the added vertex
// could be the canonical deletion vertex: of minimum degree, and in the
// orbit of the min-degree vertex with the largest canonical label (tested
// up to isomorphism of the vertex-deleted graph). Children of one parent are
// deduplicated by canonical form.
class Grower {
 public:
  explicit Grower(const Constraints& c) : c_(c) {}

  std::vector<Graph> children(const Graph& parent, bool emit_level) const {
    const int m = parent.order();
    std::array<int, kMaxOrder> deg{};
    std::array<VertexSet, kMaxOrder> conflict{};
    for (int u = 0; u < m; ++u) {
      deg[static_cast<std::size_t>(u)] = parent.degree(u);
      conflict[static_cast<std::size_t>(u)] = ball(parent, u, c_.min_cycle - 3) & ~bit(u);
    }

    std::vector<Graph> kept;
    for (int k = 0; k <= m; ++k) {
      VertexSet must = 0;
      VertexSet allowed = 0;
      bool infeasible = false;
      for (int u = 0; u < m; ++u) {
        const int d = deg[static_cast<std::size_t>(u)];
        if (d < k - 1) infeasible = true;
        if (d == k - 1) must |= bit(u);
        if (d >= k) allowed |= bit(u);
      }
      if (infeasible) break;
      if (count(must) > k) continue;
      VertexSet blocked = 0;
      for_each_vertex(must, [&](int u) { blocked |= conflict[static_cast<std::size_t>(u)]; });
      if ((blocked & must) != 0) continue;
      choose(parent, conflict, must, allowed & ~blocked, k - count(must), k, emit_level, kept);
    }
    std::sort(kept.begin(), kept.end(), rows_less);
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return kept;
  }

 private:
  static VertexSet ball(const Graph& g, int v, int radius) {
    VertexSet seen = bit(v);
    VertexSet frontier = seen;
    for (int r = 0; r < radius && frontier != 0; ++r) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  void choose(const Graph& parent, const std::array<VertexSet, kMaxOrder>& conflict, VertexSet chosen,
              VertexSet pool, int remaining, int k, bool emit_level, std::vector<Graph>& kept) const {
    if (remaining == 0) {
      try_child(parent, chosen, k, emit_level, kept);
      return;
    }
    while (count(pool) >= remaining) {
      const int u = lowest(pool);
      pool &= ~bit(u);
      choose(parent, conflict, chosen | bit(u), pool & ~conflict[static_cast<std::size_t>(u)], remaining - 1, k,
             emit_level, kept);
    }
  }

  void try_child(const Graph& parent, VertexSet nbrs, int k, bool emit_level, std::vector<Graph>& kept) const {
    const int m = parent.order();
    std::array<VertexSet, kMaxOrder> rows{};
    std::copy(parent.rows().begin(), parent.rows().end(), rows.begin());
    for_each_vertex(nbrs, [&](int u) { rows[static_cast<std::size_t>(u)] |= bit(m); });
    rows[static_cast<std::size_t>(m)] = nbrs;
    const Graph child = Graph::from_rows(m + 1, std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(m + 1)));
    if (emit_level && !passes_emit_filters(child, c_)) return;

    const CanonicalLabeling lab = canonical_labeling(child);
    int w = -1;
    for (int v = 0; v <= m; ++v) {
      if (child.degree(v) == k && (w < 0 || lab.position[static_cast<std::size_t>(v)] > lab.position[static_cast<std::size_t>(w)])) {
        w = v;
      }
    }
    const auto orbit = [&](int v) { return lab.known_orbit[static_cast<std::size_t>(v)]; };
    const auto cell = [&](int v) { return lab.refined_cell[static_cast<std::size_t>(v)]; };
    bool accept = w == m || orbit(w) == orbit(m);
    if (!accept && cell(w) == cell(m)) accept = canonical_form(delete_vertex(child, w)) == parent;
    if (accept) kept.push_back(lab.form);
  }

  Constraints c_;
};

struct Aborted {};

// Receives every emitted graph of one work unit.
struct UnitResult {
  std::vector<SearchHit> hits;
  std::map<int, OrderCount> counts;
};

bool has_degree2(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) return true;
  }
  return false;
}

std::optional<SearchHit> test_saturated(const Graph& g) {
  if (!is_detour_saturated(g, SaturationCheck::kRequiredEdge).verdict) return std::nullopt;
  SearchHit hit;
  hit.graph6 = graph6_encode(g);
  if (!is_detour_saturated(g, SaturationCheck::kFullRecompute).verdict) {
    throw std::logic_error("saturation checks disagree on " + hit.graph6);
  }
  hit.order = g.order();
  hit.size = g.size();
  hit.girth = girth(g);
  hit.tau = g.order() == 0 ? 0 : detour_order(g).tau;
  hit.connected = is_connected(g);
  if (has_degree2(g) && !(hit.girth == Girth::finite(3))) {
    throw std::logic_error("detour-saturated graph with a degree-2 vertex and no triangle: " + hit.graph6);
  }
  return hit;
}

// Depth-first growth below one representative.
class Walker {
 public:
  using Emit = std::function<void(const Graph&)>;

  Walker(const Constraints& c, Emit emit, std::optional<Clock::time_point> deadline)
      : c_(c), grower_(c), emit_(std::move(emit)), deadline_(deadline) {}

  void walk(const Graph& g) {
    if (deadline_ && (++ticks_ & 63U) == 0 && Clock::now() > *deadline_) throw Aborted{};
    if (g.order() >= c_.order_min && passes_emit_filters(g, c_)) emit_(g);
    if (g.order() >= c_.order_max) return;
    for (const Graph& child : grower_.children(g, g.order() + 1 == c_.order_max)) walk(child);
  }

  // Walks the orders below `stop`, returning the representatives at `stop`.
  void collect(const Graph& g, int stop, std::vector<Graph>& out) {
    if (g.order() == stop) {
      out.push_back(g);
      return;
    }
    if (g.order() >= c_.order_min && passes_emit_filters(g, c_)) emit_(g);
    for (const Graph& child : grower_.children(g, g.order() + 1 == c_.order_max)) collect(child, stop, out);
  }

 private:
  Constraints c_;
  Grower grower_;
  Emit emit_;
  std::optional<Clock::time_point> deadline_;
  unsigned ticks_ = 0;
};

void merge_counts(std::map<int, OrderCount>& into, const std::map<int, OrderCount>& from) {
  for (const auto& [order, c] : from) {
    into[order].examined += c.examined;
    into[order].hits += c.hits;
  }
}

nlohmann::json hit_json(const SearchHit& hit) {
  nlohmann::json j;
  j["graph6"] = hit.graph6;
  j["order"] = hit.order;
  j["size"] = hit.size;
  if (hit.girth.is_acyclic()) {
    j["girth"] = nullptr;
  } else {
    j["girth"] = hit.girth.value();
  }
  j["tau"] = hit.tau;
  return j;
}

}  // namespace

void validate(const SearchSpec& spec) {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::kInvalidSpec, what); };
  if (spec.order_min < 1) bad("order_min must be at least 1");
  if (spec.order_max < spec.order_min) bad("order_max must be at least order_min");
  if (spec.order_max > kMaxOrder) bad("order_max exceeds the vertex cap");
  if (spec.girth_exact) {
    if (*spec.girth_exact < 3) bad("girth_exact must be at least 3");
    if (*spec.girth_exact >= 4 && !spec.triangle_free) bad("girth_exact >= 4 requires triangle_free");
    if (*spec.girth_exact == 3 && spec.triangle_free) bad("girth_exact 3 contradicts triangle_free");
  }
  if (spec.forbid_degree2 && !spec.triangle_free) bad("forbid_degree2 is only valid with triangle_free");
  if (spec.threads < 1) bad("threads must be at least 1");
  if (spec.budget && spec.budget->count() < 0) bad("budget must not be negative");
}

std::uint64_t spec_hash(const SearchSpec& spec) {
  const std::string key = "detourlab-search/1|" + std::to_string(spec.order_min) + "|" +
                          std::to_string(spec.order_max) + "|" + (spec.triangle_free ? "tf" : "-") + "|" +
                          (spec.girth_exact ? std::to_string(*spec.girth_exact) : "-") + "|" +
                          (spec.forbid_degree2 ? "nodeg2" : "-") + "|" + (spec.include_forests ? "forests" : "-") + "|" +
                          std::to_string(unit_order(spec));
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

int unit_order(const SearchSpec& spec) { return std::clamp(spec.order_max - 4, 1, spec.order_max); }

void enumerate(const SearchSpec& spec, const std::function<void(const Graph&)>& visit) {
  validate(spec);
  Walker walker(constraints_of(spec), visit, std::nullopt);
  std::vector<Graph> units;
  walker.collect(Graph::empty(1), unit_order(spec), units);
  for (const Graph& g : units) walker.walk(g);
}

SearchOutcome search_detour_saturated(const SearchSpec& spec, const SearchOptions& options) {
  validate(spec);
  const Constraints c = constraints_of(spec);
  const std::uint64_t hash = spec_hash(spec);
  const int split = unit_order(spec);
  const auto started = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (spec.budget) deadline = started + *spec.budget;

  const bool include_forests = spec.include_forests;
  auto tester = [include_forests](UnitResult& into) {
    return [&into, include_forests](const Graph& g) {
      if (!include_forests && g.size() <= g.order() - 1 && girth(g).is_acyclic()) return;
      OrderCount& oc = into.counts[g.order()];
      ++oc.examined;
      if (auto hit = test_saturated(g)) {
        ++oc.hits;
        into.hits.push_back(std::move(*hit));
      }
    };
  };

  UnitResult prefix;
  std::vector<Graph> units;
  Walker(c, tester(prefix), std::nullopt).collect(Graph::empty(1), split, units);
  const std::size_t total = units.size();

  std::vector<std::optional<UnitResult>> results(total);
  std::map<int, OrderCount> unit_counts;
  if (spec.checkpoint_path && std::filesystem::exists(*spec.checkpoint_path)) {
    Checkpoint cp = checkpoint_resume(*spec.checkpoint_path, hash);
    if (cp.unit_order != static_cast<std::uint32_t>(split) || cp.units_total != total) {
      throw Error(ErrorKind::kCheckpointMismatch, "checkpoint unit layout differs from this search");
    }
    for (auto id : cp.completed_units) results[id].emplace();
    for (auto& [unit, hit] : cp.hits) {
      if (!results[unit]) throw Error(ErrorKind::kParseError, "checkpoint hit refers to an unfinished unit");
      results[unit]->hits.push_back(std::move(hit));
    }
    unit_counts = std::move(cp.counts);
  }

  std::ofstream jsonl;
  if (options.hits_jsonl_path) {
    jsonl.open(*options.hits_jsonl_path, std::ios::trunc);
    if (!jsonl) throw Error(ErrorKind::kIo, "cannot open " + *options.hits_jsonl_path);
  }
  auto publish = [&](const SearchHit& hit) {
    if (options.on_hit) options.on_hit(hit);
    if (jsonl.is_open()) jsonl << hit_json(hit).dump() << '\n' << std::flush;
  };
  for (const auto& hit : prefix.hits) publish(hit);

  std::mutex mu;
  std::size_t next_to_publish = 0;
  auto publish_ready = [&] {
    while (next_to_publish < total && results[next_to_publish]) {
      for (const auto& hit : results[next_to_publish]->hits) publish(hit);
      ++next_to_publish;
    }
  };

  auto snapshot = [&] {
    Checkpoint cp;
    cp.spec_hash = hash;
    cp.unit_order = static_cast<std::uint32_t>(split);
    cp.units_total = total;
    cp.counts = unit_counts;
    for (std::size_t i = 0; i < total; ++i) {
      if (!results[i]) continue;
      cp.completed_units.push_back(i);
      for (const auto& hit : results[i]->hits) cp.hits.emplace_back(i, hit);
    }
    return cp;
  };

  std::atomic<std::size_t> next_unit{0};
  std::atomic<bool> stop{false};
  std::size_t finished_this_run = 0;
  auto last_save = Clock::now();
  constexpr auto kSaveInterval = std::chrono::seconds(60);
  std::exception_ptr failure;

  {
    std::lock_guard lock(mu);
    publish_ready();
  }

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next_unit.fetch_add(1);
      if (i >= total) return;
      {
        std::lock_guard lock(mu);
        if (results[i]) continue;
      }
      UnitResult local;
      try {
        Walker(c, tester(local), deadline).walk(units[i]);
      } catch (const Aborted&) {
        stop = true;
        return;
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
      std::lock_guard lock(mu);
      merge_counts(unit_counts, local.counts);
      results[i] = std::move(local);
      ++finished_this_run;
      publish_ready();
      if (options.stop_after_units && finished_this_run >= *options.stop_after_units) stop = true;
      if (spec.checkpoint_path && Clock::now() - last_save > kSaveInterval) {
        checkpoint_save(*spec.checkpoint_path, snapshot());
        last_save = Clock::now();
      }
    }
  };

  const int threads = std::max(1, spec.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  if (spec.checkpoint_path) checkpoint_save(*spec.checkpoint_path, snapshot());

  SearchOutcome out;
  out.units_total = total;
  out.counts = prefix.counts;
  merge_counts(out.counts, unit_counts);
  for (int order = spec.order_min; order <= spec.order_max; ++order) out.counts[order];
  out.hits = prefix.hits;
  for (const auto& r : results) {
    if (!r) continue;
    ++out.units_done;
    out.hits.insert(out.hits.end(), r->hits.begin(), r->hits.end());
  }
  out.completed = out.units_done == total;
  std::sort(out.hits.begin(), out.hits.end(), [](const SearchHit& a, const SearchHit& b) {
    return std::tie(a.order, a.size, a.graph6) < std::tie(b.order, b.size, b.graph6);
  });
  return out;
}

}  // namespace detourlab
