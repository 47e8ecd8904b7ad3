#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "detourlab/atlas.hpp"
#include "detourlab/error.hpp"
#include "detourlab/graph6.hpp"
#include "detourlab/iso.hpp"
#include "detourlab/paths.hpp"
#include "detourlab/properties.hpp"
#include "detourlab/search.hpp"
#include "detourlab/verify.hpp"
#include "detourlab/version.hpp"

namespace detourlab::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Raised for bad flag values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kProperties{
    "girth", "tau", "connected", "detour-saturated", "hamiltonian", "hypohamiltonian",
    "maximally-nonhamiltonian", "maximal-hypohamiltonian",
};

double millis(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

json girth_json(const Girth& g) { return g.is_acyclic() ? json(nullptr) : json(g.value()); }

json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, FailingNonedge>) {
          return {{"nonedge", {x.edge.first, x.edge.second}}};
        } else if constexpr (std::is_same_v<T, FailingVertex>) {
          return {{"vertex", x.vertex}};
        } else if constexpr (std::is_same_v<T, VertexPath>) {
          return {{"path", x.vertices}};
        } else {
          return {{"cycle", x.vertices}};
        }
      },
      w);
}

json error_json(const Error& e) {
  json j{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (e.offset()) j["offset"] = *e.offset();
  return j;
}

json report_json(const PropertyReport& r) {
  return {{"verdict", r.verdict}, {"witness", witness_json(r.witness)}, {"elapsed_ms", millis(r.elapsed)}};
}

json evaluate(const std::string& prop, const Graph& g) {
  const auto t0 = Clock::now();
  auto since = [&] { return millis(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0)); };
  try {
    if (prop == "girth") {
      const json value = girth_json(girth(g));
      return {{"value", value}, {"elapsed_ms", since()}};
    }
    if (prop == "tau") {
      const auto r = detour_order(g);
      return {{"value", r.tau}, {"witness", {{"path", r.witness.vertices}}}, {"elapsed_ms", since()}};
    }
    if (prop == "connected") {
      const bool c = is_connected(g);
      return {{"value", c}, {"elapsed_ms", since()}};
    }
    if (prop == "detour-saturated") return report_json(is_detour_saturated(g));
    if (prop == "hamiltonian") return report_json(is_hamiltonian(g));
    if (prop == "hypohamiltonian") return report_json(is_hypohamiltonian(g));
    if (prop == "maximally-nonhamiltonian") return report_json(is_maximally_nonhamiltonian(g));
    return report_json(is_maximal_hypohamiltonian(g));
  } catch (const Error& e) {
    return {{"error", error_json(e)}};
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Accepts "90", "90s", "1500ms", "5m" or "2h"; bare numbers are seconds.
std::chrono::milliseconds parse_budget(const std::string& text) {
  static const std::regex re(R"(^(\d+)(ms|s|m|h)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("invalid --budget '" + text + "' (use e.g. 90s, 1500ms, 5m, 2h)");
  const long long v = std::stoll(m[1].str());
  const std::string unit = m[2].str();
  if (unit == "ms") return std::chrono::milliseconds(v);
  if (unit == "m") return std::chrono::minutes(v);
  if (unit == "h") return std::chrono::hours(v);
  return std::chrono::seconds(v);
}

int default_threads() {
  const char* env = std::getenv("DETOURLAB_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw UsageError(std::string("invalid DETOURLAB_THREADS '") + env + "'");
  return static_cast<int>(v);
}

// Opens `path` ("-" or empty means `in`) and calls `fn(line_number, line)`
// for every non-blank line.
void for_each_line(const std::string& path, std::istream& in, const std::function<void(std::size_t, const std::string&)>& fn) {
  std::ifstream file;
  std::istream* src = &in;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw Error(ErrorKind::kIo, "cannot open " + path);
    src = &file;
  }
  std::size_t number = 0;
  for (std::string line; std::getline(*src, line);) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    fn(number, line);
  }
}

int cmd_check(const std::string& input, const std::string& props_text, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const auto props = split_list(props_text);
  if (props.empty()) throw UsageError("--props needs at least one property");
  for (const auto& p : props) {
    if (std::find(kProperties.begin(), kProperties.end(), p) == kProperties.end()) {
      throw UsageError("unknown property '" + p + "'");
    }
  }
  bool parse_failed = false;
  for_each_line(input, in, [&](std::size_t number, const std::string& line) {
    json rec{{"line", number}};
    Graph g = Graph::empty(0);
    try {
      g = graph6_decode(line);
    } catch (const Error& e) {
      parse_failed = true;
      rec["error"] = error_json(e);
      out << rec.dump() << '\n' << std::flush;
      err << "line " << number << ": " << e.what() << '\n';
      return;
    }
    rec["input"] = {{"graph6", graph6_encode(g)}, {"cert", canonical_cert(g).bytes}};
    rec["order"] = g.order();
    rec["size"] = g.size();
    json results = json::object();
    for (const auto& p : props) results[p] = evaluate(p, g);
    rec["results"] = std::move(results);
    out << rec.dump() << '\n' << std::flush;
  });
  return parse_failed ? kExitFailed : kExitOk;
}

void emit_graph(std::ostream& out, const Graph& g) { out << graph6_encode(g) << '\n'; }

int cmd_split(const std::string& input, int vertex, std::istream& in, std::ostream& out, std::ostream& err) {
  bool failed = false;
  for_each_line(input, in, [&](std::size_t number, const std::string& line) {
    try {
      emit_graph(out, split_vertex(graph6_decode(line), vertex));
    } catch (const Error& e) {
      failed = true;
      err << "line " << number << ": " << e.what() << '\n';
    }
  });
  return failed ? kExitFailed : kExitOk;
}

json hit_json(const SearchHit& h) {
  return {{"graph6", h.graph6}, {"cert", h.graph6},   {"order", h.order},         {"size", h.size},
          {"girth", girth_json(h.girth)}, {"tau", h.tau}, {"connected", h.connected}};
}

json spec_json(const SearchSpec& s) {
  json j{{"order_min", s.order_min},
         {"order_max", s.order_max},
         {"triangle_free", s.triangle_free},
         {"girth_exact", s.girth_exact ? json(*s.girth_exact) : json(nullptr)},
         {"forbid_deg2", s.forbid_degree2},
         {"include_forests", s.include_forests},
         {"budget_ms", s.budget ? json(s.budget->count()) : json(nullptr)}};
  return j;
}

int cmd_search(SearchSpec spec, const std::string& hits_jsonl, bool pretty, std::ostream& out) {
  // Girth 4 and above excludes triangles, so the flag is implied.
  if (spec.girth_exact && *spec.girth_exact >= 4) spec.triangle_free = true;
  validate(spec);
  SearchOptions opts;
  opts.on_hit = [&](const SearchHit& h) { out << hit_json(h).dump() << '\n' << std::flush; };
  if (!hits_jsonl.empty()) opts.hits_jsonl_path = hits_jsonl;
  const auto t0 = Clock::now();
  const SearchOutcome res = search_detour_saturated(spec, opts);
  const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);

  json counts = json::object();
  for (const auto& [order, c] : res.counts) counts[std::to_string(order)] = {{"examined", c.examined}, {"hits", c.hits}};
  json summary{{"command", "search"},
               {"version", std::string(kVersion)},
               {"spec", spec_json(spec)},
               {"completed", res.completed},
               {"units_total", res.units_total},
               {"units_done", res.units_done},
               {"hits", res.hits.size()},
               {"counts", std::move(counts)},
               {"elapsed_ms", millis(elapsed)}};
  out << json{{"summary", std::move(summary)}}.dump() << '\n';
  if (pretty) {
    out << "\n" << (res.completed ? "completed" : "stopped early") << ": " << res.hits.size() << " hit(s), "
        << res.units_done << "/" << res.units_total << " units\n";
    out << "order  examined  hits\n";
    for (const auto& [order, c] : res.counts) out << order << "  " << c.examined << "  " << c.hits << "\n";
    for (const auto& h : res.hits) {
      out << "  " << h.graph6 << "  order " << h.order << "  size " << h.size << "  girth " << h.girth.to_string()
          << "  tau " << h.tau << "\n";
    }
  }
  return res.completed ? kExitOk : kExitFailed;
}

int cmd_verify(Tier tier, int threads, const std::string& checkpoint_dir, bool pretty, std::ostream& out) {
  VerifyOptions opts;
  opts.threads = threads;
  if (!checkpoint_dir.empty()) opts.checkpoint_dir = checkpoint_dir;
  std::vector<std::string> lines;
  opts.on_check = [&](const CheckOutcome& c) {
    json j{{"check", c.id}, {"criterion", c.criterion}, {"passed", c.passed}, {"detail", c.detail},
           {"elapsed_ms", millis(c.elapsed)}};
    out << j.dump() << '\n' << std::flush;
    if (pretty) {
      std::ostringstream line;
      line << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.detail;
      lines.push_back(line.str());
    }
  };
  const auto t0 = Clock::now();
  const auto results = verify_paper(tier, opts);
  json failed = json::array();
  for (const auto& c : results) {
    if (!c.passed) failed.push_back(c.id);
  }
  const bool ok = failed.empty();
  json summary{{"command", "verify-paper"},
               {"version", std::string(kVersion)},
               {"tier", std::string(to_string(tier))},
               {"checks", results.size()},
               {"passed", ok},
               {"failed", std::move(failed)},
               {"elapsed_ms", millis(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0))}};
  out << json{{"summary", std::move(summary)}}.dump() << '\n';
  if (pretty) {
    out << '\n';
    for (const auto& l : lines) out << l << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact detour orders, detour-saturation and hamiltonicity checks for small graphs", "detourlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto* check = app.add_subcommand("check", "Evaluate properties of graph6 graphs, one JSON object per line");
  std::string check_input;
  std::string props = "girth,tau,detour-saturated";
  check->add_option("--input,-i", check_input, "graph6 file, one graph per line (default: stdin)");
  check->add_option("--props,-p", props, "Comma-separated properties: girth, tau, connected, detour-saturated, "
                                         "hamiltonian, hypohamiltonian, maximally-nonhamiltonian, "
                                         "maximal-hypohamiltonian")
      ->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Print a named graph as graph6");
  construct->require_subcommand(1);
  auto* c_petersen = construct->add_subcommand("petersen", "Petersen graph");
  auto* c_pr = construct->add_subcommand("pr", "Petersen graph with one vertex split into three leaves");
  int pr_vertex = 0;
  c_pr->add_option("--vertex,-x", pr_vertex, "Vertex to split")->capture_default_str();
  auto* c_snark = construct->add_subcommand("flower-snark", "Isaacs flower snark J_k");
  int snark_k = 0;
  c_snark->add_option("--k,-k", snark_k, "Odd k >= 3")->required();
  auto* c_coxeter = construct->add_subcommand("coxeter", "Coxeter graph");
  auto* c_split = construct->add_subcommand("split", "Split a vertex of each input graph into leaves");
  std::string split_input;
  int split_x = 0;
  c_split->add_option("--input,-i", split_input, "graph6 file (default: stdin)");
  c_split->add_option("--vertex,-x", split_x, "Vertex to split")->required();

  auto* search = app.add_subcommand("search", "Exhaustive search for detour-saturated graphs");
  SearchSpec spec;
  std::optional<int> search_threads;
  std::string budget_text;
  std::string checkpoint;
  std::string hits_jsonl;
  bool search_pretty = false;
  search->add_option("--order-min", spec.order_min, "Smallest order searched")->capture_default_str();
  search->add_option("--order-max", spec.order_max, "Largest order searched")->required();
  search->add_flag("--triangle-free", spec.triangle_free, "Only triangle-free graphs");
  search->add_option("--girth-exact", spec.girth_exact, "Girth must equal this value (>= 4 implies --triangle-free)");
  search->add_flag("--forbid-deg2", spec.forbid_degree2, "Skip graphs with a degree-2 vertex (needs --triangle-free)");
  search->add_flag("--include-forests", spec.include_forests, "Also report acyclic graphs");
  search->add_option("--threads,-j", search_threads, "Worker threads (default: DETOURLAB_THREADS or 1)");
  search->add_option("--budget", budget_text, "Wall-clock budget, e.g. 90s, 5m, 2h");
  search->add_option("--checkpoint", checkpoint, "Checkpoint file; resumed when it exists");
  search->add_option("--hits-jsonl", hits_jsonl, "Also write hits to this JSONL file");
  search->add_flag("--pretty", search_pretty, "Append a human-readable summary");

  auto* verify = app.add_subcommand("verify-paper", "Run the tiered verification suite");
  std::string tier_text = "quick";
  std::optional<int> verify_threads;
  std::string checkpoint_dir;
  bool verify_pretty = false;
  verify->add_option("--tier", tier_text, "quick, full or extended")
      ->check(CLI::IsMember({"quick", "full", "extended"}))
      ->capture_default_str();
  verify->add_option("--threads,-j", verify_threads, "Worker threads (default: DETOURLAB_THREADS or 1)");
  verify->add_option("--checkpoint-dir", checkpoint_dir, "Where the extended tier keeps its checkpoint");
  verify->add_flag("--pretty", verify_pretty, "Append a human-readable summary");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_input, props, in, out, err);
    if (construct->parsed()) {
      if (c_petersen->parsed()) emit_graph(out, petersen().graph);
      if (c_pr->parsed()) emit_graph(out, pr(pr_vertex).graph);
      if (c_snark->parsed()) emit_graph(out, flower_snark(snark_k).graph);
      if (c_coxeter->parsed()) emit_graph(out, coxeter().graph);
      if (c_split->parsed()) return cmd_split(split_input, split_x, in, out, err);
      return kExitOk;
    }
    if (search->parsed()) {
      spec.threads = search_threads ? *search_threads : default_threads();
      if (!budget_text.empty()) spec.budget = parse_budget(budget_text);
      if (!checkpoint.empty()) spec.checkpoint_path = checkpoint;
      return cmd_search(spec, hits_jsonl, search_pretty, out);
    }
    const int threads = verify_threads ? *verify_threads : default_threads();
    if (threads < 1) throw UsageError("--threads must be at least 1");
    return cmd_verify(tier_from_string(tier_text), threads, checkpoint_dir, verify_pretty, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kInvalidSpec:
      case ErrorKind::kInvalidParameter:
      case ErrorKind::kInvalidVertex:
        return kExitUsage;
      default:
        return kExitFailed;
    }
  }
}

}  // namespace detourlab::cli
