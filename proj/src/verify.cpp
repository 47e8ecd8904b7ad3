#include "detourlab/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "detourlab/atlas.hpp"
#include "detourlab/error.hpp"
#include "detourlab/graph6.hpp"
#include "detourlab/iso.hpp"
#include "detourlab/paths.hpp"
#include "detourlab/properties.hpp"

namespace detourlab {

namespace {

using Clock = std::chrono::steady_clock;

// Collects failed expectations; the first few end up in the detail line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) {
      if (!notes_.empty()) notes_ += "; ";
      notes_ += what;
    }
  }

  bool ok() const { return failures_ == 0; }

  std::string failed_detail() const {
    std::string s = "FAILED " + notes_;
    if (failures_ > 3) s += "; and " + std::to_string(failures_ - 3) + " more";
    return s;
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

CheckOutcome run_check(int criterion, std::string id, const std::function<std::string(Tally&)>& body) {
  CheckOutcome out;
  out.criterion = criterion;
  out.id = std::move(id);
  const auto t0 = Clock::now();
  Tally tally;
  std::string summary;
  try {
    summary = body(tally);
  } catch (const std::exception& e) {
    tally.expect(false, std::string("exception: ") + e.what());
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
  out.passed = tally.ok();
  out.detail = out.passed ? summary : tally.failed_detail();
  return out;
}

std::string girth_text(const Girth& g) { return g.to_string(); }

bool is_cubic(const Graph& g) { return is_regular(g, 3); }

std::string sizes_text(const std::vector<int>& sizes) {
  std::string s = "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + "}";
}

// Order, girth, detour order and saturation of one split, all required.
void expect_split(Tally& t, const Graph& g, const std::string& name, int order, int g_expected, int tau) {
  t.expect(g.order() == order, name + " order " + std::to_string(g.order()));
  t.expect(girth(g) == Girth::finite(g_expected), name + " girth " + girth_text(girth(g)));
  const int got = detour_order(g).tau;
  t.expect(got == tau, name + " tau " + std::to_string(got));
  t.expect(is_detour_saturated(g).verdict, name + " not detour-saturated");
}

}  // namespace

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::kQuick: return "quick";
    case Tier::kFull: return "full";
    case Tier::kExtended: return "extended";
  }
  return "?";
}

Tier tier_from_string(std::string_view s) {
  if (s == "quick") return Tier::kQuick;
  if (s == "full") return Tier::kFull;
  if (s == "extended") return Tier::kExtended;
  throw Error(ErrorKind::kInvalidParameter, "unknown tier '" + std::string(s) + "'");
}

CheckOutcome check_petersen() {
  return run_check(6, "petersen", [](Tally& t) {
    const Graph g = petersen().graph;
    t.expect(g.order() == 10, "order");
    t.expect(g.size() == 15, "size");
    t.expect(girth(g) == Girth::finite(5), "girth " + girth_text(girth(g)));
    t.expect(detour_order(g).tau == 10, "tau");
    t.expect(is_maximal_hypohamiltonian(g).verdict, "not maximal hypohamiltonian");
    return std::string("order 10, size 15, girth 5, tau 10, maximal hypohamiltonian");
  });
}

CheckOutcome check_pr() {
  return run_check(7, "pr", [](Tally& t) {
    const Graph g = pr().graph;
    t.expect(g.order() == 12, "order");
    t.expect(g.size() == 15, "size");
    t.expect(girth(g) == Girth::finite(5), "girth " + girth_text(girth(g)));
    t.expect(detour_order(g).tau == 10, "tau");
    t.expect(is_detour_saturated(g).verdict, "not detour-saturated");
    return std::string("order 12, size 15, girth 5, tau 10, detour-saturated");
  });
}

CheckOutcome check_flower_snarks() {
  return run_check(8, "flower-snarks", [](Tally& t) {
    const std::pair<int, int> cases[] = {{5, 5}, {7, 6}, {9, 6}};
    for (const auto& [k, gi] : cases) {
      const std::string name = "J" + std::to_string(k);
      const Graph g = flower_snark(k).graph;
      t.expect(g.order() == 4 * k, name + " order");
      t.expect(is_cubic(g), name + " not cubic");
      t.expect(girth(g) == Girth::finite(gi), name + " girth " + girth_text(girth(g)));
      t.expect(is_hypohamiltonian(g).verdict, name + " not hypohamiltonian");
      t.expect(is_maximally_nonhamiltonian(g).verdict, name + " not maximally nonhamiltonian");
    }
    return std::string("J5/J7/J9 cubic of orders 20/28/36, girths 5/6/6, maximal hypohamiltonian");
  });
}

CheckOutcome check_j7_splits() {
  return run_check(9, "j7-splits", [](Tally& t) {
    const Graph base = flower_snark(7).graph;
    for (int x = 0; x < base.order(); ++x) {
      const std::string name = "(J7)s[" + std::to_string(x) + "]";
      expect_split(t, j_split(7, x).graph, name, 30, 6, 28);
      t.expect(girth(delete_vertex(base, x)) == Girth::finite(6), "girth of J7-" + std::to_string(x));
    }
    return std::string("all 28 splits: order 30, girth 6, tau 28, detour-saturated; girth(J7-x) = 6");
  });
}

CheckOutcome check_coxeter() {
  return run_check(10, "coxeter", [](Tally& t) {
    const Graph g = coxeter().graph;
    t.expect(g.order() == 28, "order");
    t.expect(is_cubic(g), "not cubic");
    t.expect(girth(g) == Girth::finite(7), "girth " + girth_text(girth(g)));
    t.expect(!has_hamilton_cycle(g), "hamiltonian");
    t.expect(is_maximal_hypohamiltonian(g).verdict, "not maximal hypohamiltonian");
    for (int x = 0; x < g.order(); ++x) {
      expect_split(t, coxeter_split(x).graph, "CTs[" + std::to_string(x) + "]", 30, 7, 28);
      t.expect(girth(delete_vertex(g, x)) == Girth::finite(7), "girth of CT-" + std::to_string(x));
    }
    return std::string(
        "order 28, cubic, girth 7, nonhamiltonian, maximal hypohamiltonian; all 28 splits: order 30, girth 7, "
        "tau 28, detour-saturated; girth(CT-x) = 7");
  });
}

CheckOutcome check_split_lemma() {
  return run_check(0, "split-lemma", [](Tally& t) {
    int splits = 0;
    for (const auto& base : {petersen(), flower_snark(5), flower_snark(7), flower_snark(9), coxeter()}) {
      t.expect(is_maximal_hypohamiltonian(base.graph).verdict, base.name + " not maximal hypohamiltonian");
      for (int x = 0; x < base.graph.order(); ++x) {
        if (base.graph.degree(x) != 3) continue;
        const Graph s = split_vertex(base.graph, x);
        const std::string name = base.name + "s[" + std::to_string(x) + "]";
        t.expect(detour_order(s).tau == base.graph.order(), name + " tau");
        t.expect(is_detour_saturated(s).verdict, name + " not detour-saturated");
        ++splits;
      }
    }
    return std::to_string(splits) + " splits of Petersen, J5, J7, J9, Coxeter: detour-saturated, tau = base order";
  });
}

SearchSpec theorem2_spec(int threads) {
  SearchSpec s;
  s.order_min = 1;
  s.order_max = 12;
  s.triangle_free = true;
  s.forbid_degree2 = true;
  s.threads = threads;
  return s;
}

SearchSpec theorem1_spec(int order_max, int threads) {
  SearchSpec s;
  s.order_min = 1;
  s.order_max = order_max;
  s.triangle_free = true;
  s.girth_exact = 4;
  s.threads = threads;
  return s;
}

CheckOutcome judge_theorem2(const SearchOutcome& out) {
  return run_check(11, "theorem2-search", [&](Tally& t) {
    t.expect(out.completed, "search incomplete");
    t.expect(out.hits.size() == 2, std::to_string(out.hits.size()) + " hits");
    std::vector<int> sizes;
    bool pr_found = false;
    for (const auto& h : out.hits) {
      t.expect(h.order == 12, "hit of order " + std::to_string(h.order));
      t.expect(h.girth == Girth::finite(5), "hit of girth " + girth_text(h.girth));
      sizes.push_back(h.size);
      if (h.size == 15) pr_found = are_isomorphic(graph6_decode(h.graph6), pr().graph);
    }
    std::sort(sizes.begin(), sizes.end());
    t.expect(sizes == std::vector<int>{15, 17}, "sizes " + sizes_text(sizes));
    t.expect(pr_found, "size-15 hit is not Pr");
    for (int order = 1; order <= 11; ++order) {
      const auto it = out.counts.find(order);
      t.expect(it != out.counts.end() && it->second.hits == 0, "hits at order " + std::to_string(order));
    }
    return "2 hits at order 12, sizes " + sizes_text(sizes) + ", both girth 5, size 15 is Pr";
  });
}

CheckOutcome judge_theorem1_partial(const SearchOutcome& out) {
  return run_check(12, "theorem1-to-12", [&](Tally& t) {
    t.expect(out.completed, "search incomplete");
    t.expect(out.hits.empty(), std::to_string(out.hits.size()) + " hits");
    std::uint64_t examined = 0;
    for (const auto& [order, c] : out.counts) examined += c.examined;
    return "0 hits at orders 1..12 (" + std::to_string(examined) + " girth-4 candidates)";
  });
}

CheckOutcome judge_determinism(const std::vector<std::pair<SearchOutcome, SearchOutcome>>& runs, int threads) {
  return run_check(13, "determinism", [&](Tally& t) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const auto& [a, b] = runs[i];
      t.expect(a.hits == b.hits, "search " + std::to_string(i + 1) + " hit lists differ");
      t.expect(a.counts == b.counts, "search " + std::to_string(i + 1) + " counts differ");
      t.expect(a.completed && b.completed, "search " + std::to_string(i + 1) + " incomplete");
    }
    return "identical hits and counts at 1 and " + std::to_string(threads) + " threads";
  });
}

CheckOutcome judge_theorem1_extended(const SearchOutcome& out) {
  return run_check(14, "theorem1-extended", [&](Tally& t) {
    t.expect(out.completed, "search incomplete (" + std::to_string(out.units_done) + "/" +
                                std::to_string(out.units_total) + " units)");
    auto hits_at = [&](int order) {
      const auto it = out.counts.find(order);
      return it == out.counts.end() ? std::uint64_t{0} : it->second.hits;
    };
    t.expect(hits_at(13) == 0, std::to_string(hits_at(13)) + " hits at order 13");
    t.expect(hits_at(14) == 1, std::to_string(hits_at(14)) + " hits at order 14");
    t.expect(out.hits.size() == 1, std::to_string(out.hits.size()) + " hits in total");
    std::string g6;
    if (out.hits.size() == 1) {
      const SearchHit& h = out.hits.front();
      g6 = h.graph6;
      const Graph g = graph6_decode(h.graph6);
      t.expect(h.order == 14, "hit order " + std::to_string(h.order));
      t.expect(h.tau == 13, "hit tau " + std::to_string(h.tau));
      t.expect(girth(g) == Girth::finite(4), "hit girth " + girth_text(girth(g)));
      t.expect(detour_order(g).tau == 13, "recomputed tau");
      t.expect(is_detour_saturated(g, SaturationCheck::kFullRecompute).verdict, "full recomputation disagrees");
    }
    return "1 hit at order 14, tau 13 (" + g6 + "); 0 hits at order 13";
  });
}

std::vector<CheckOutcome> verify_paper(Tier tier, const VerifyOptions& options) {
  std::vector<CheckOutcome> all;
  auto add = [&](CheckOutcome c) {
    if (options.on_check) options.on_check(c);
    all.push_back(std::move(c));
  };
  add(check_petersen());
  add(check_pr());
  add(check_flower_snarks());
  add(check_j7_splits());
  add(check_coxeter());
  add(check_split_lemma());
  if (tier == Tier::kQuick) return all;

  const int threads = std::max(1, options.threads);
  const SearchOutcome t2 = search_detour_saturated(theorem2_spec(threads));
  add(judge_theorem2(t2));
  const SearchOutcome t1 = search_detour_saturated(theorem1_spec(12, threads));
  add(judge_theorem1_partial(t1));
  // Reference runs on one thread, or on four when the main runs used one.
  const int other = threads == 1 ? 4 : 1;
  add(judge_determinism({{t2, search_detour_saturated(theorem2_spec(other))},
                         {t1, search_detour_saturated(theorem1_spec(12, other))}},
                        std::max(threads, other)));
  if (tier == Tier::kFull) return all;

  SearchSpec ext = theorem1_spec(14, threads);
  ext.order_min = 13;
  if (options.checkpoint_dir) {
    std::filesystem::create_directories(*options.checkpoint_dir);
    ext.checkpoint_path = (std::filesystem::path(*options.checkpoint_dir) / "theorem1-order14.ckpt").string();
  }
  add(judge_theorem1_extended(search_detour_saturated(ext)));
  return all;
}

}  // namespace detourlab
