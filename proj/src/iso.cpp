#include "detourlab/iso.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "detourlab/graph6.hpp"

namespace detourlab {

namespace {

using Rows = std::array<VertexSet, kMaxOrder>;

// Ordered partition of the vertex set. Cells are contiguous ranges of `lab`,
// identified by their start position.
struct Partition {
  std::array<int, kMaxOrder> lab{};
  std::array<int, kMaxOrder> cell_end{};  // valid at cell start positions
  std::array<int, kMaxOrder> cell_of{};   // vertex -> start of its cell
  int cells = 0;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Partition root;
    for (int i = 0; i < n_; ++i) {
      root.lab[static_cast<std::size_t>(i)] = i;
      root.cell_of[static_cast<std::size_t>(i)] = 0;
    }
    if (n_ > 0) {
      root.cell_end[0] = n_;
      root.cells = 1;
      refine(root, 0);
    }

    CanonicalLabeling out;
    out.refined_cell.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      out.refined_cell[static_cast<std::size_t>(v)] = root.cell_of[static_cast<std::size_t>(v)];
    }

    search(root, 0);

    out.position.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      out.position[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(i)])] = i;
    }
    out.form = Graph::from_rows(n_, std::span<const VertexSet>(best_rows_.data(), static_cast<std::size_t>(n_)));

    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gen : generators_) unite_by(parent, gen);
    out.known_orbit.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out.known_orbit[static_cast<std::size_t>(v)] = find(parent, v);
    return out;
  }

 private:
  static int find(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }

  // Union-find keeps the smallest vertex as root.
  void unite_by(std::vector<int>& parent, const std::vector<int>& gen) const {
    for (int v = 0; v < n_; ++v) {
      int a = find(parent, v);
      int b = find(parent, gen[static_cast<std::size_t>(v)]);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent[static_cast<std::size_t>(b)] = a;
    }
  }

  // Refines to the coarsest equitable partition finer than `p`, starting from
  // the splitter cell at `first_splitter`.
  void refine(Partition& p, int first_splitter) const {
    std::array<int, kMaxOrder> queue{};
    std::array<bool, kMaxOrder> queued{};
    int head = 0;
    int tail = 0;
    auto push = [&](int start) {
      if (queued[static_cast<std::size_t>(start)]) return;
      queued[static_cast<std::size_t>(start)] = true;
      queue[static_cast<std::size_t>(tail % kMaxOrder)] = start;
      ++tail;
    };
    push(first_splitter);

    std::array<int, kMaxOrder> hits{};
    while (head < tail && p.cells < n_) {
      const int w = queue[static_cast<std::size_t>(head % kMaxOrder)];
      ++head;
      queued[static_cast<std::size_t>(w)] = false;
      VertexSet splitter = 0;
      for (int i = w; i < p.cell_end[static_cast<std::size_t>(w)]; ++i) {
        splitter |= bit(p.lab[static_cast<std::size_t>(i)]);
      }

      for (int x = 0; x < n_;) {
        const int end = p.cell_end[static_cast<std::size_t>(x)];
        if (end - x > 1) {
          bool uniform = true;
          for (int i = x; i < end; ++i) {
            hits[static_cast<std::size_t>(i)] = count(g_.neighbors(p.lab[static_cast<std::size_t>(i)]) & splitter);
            if (hits[static_cast<std::size_t>(i)] != hits[static_cast<std::size_t>(x)]) uniform = false;
          }
          if (!uniform) split(p, x, end, hits, push);
        }
        x = end;
      }
    }
  }

  template <typename Push>
  void split(Partition& p, int x, int end, std::array<int, kMaxOrder>& hits, Push& push) const {
    // Insertion sort of the cell by hit count; cells are small.
    for (int i = x + 1; i < end; ++i) {
      const int v = p.lab[static_cast<std::size_t>(i)];
      const int h = hits[static_cast<std::size_t>(i)];
      int j = i - 1;
      while (j >= x && hits[static_cast<std::size_t>(j)] > h) {
        p.lab[static_cast<std::size_t>(j + 1)] = p.lab[static_cast<std::size_t>(j)];
        hits[static_cast<std::size_t>(j + 1)] = hits[static_cast<std::size_t>(j)];
        --j;
      }
      p.lab[static_cast<std::size_t>(j + 1)] = v;
      hits[static_cast<std::size_t>(j + 1)] = h;
    }
    int start = x;
    for (int i = x + 1; i <= end; ++i) {
      if (i == end || hits[static_cast<std::size_t>(i)] != hits[static_cast<std::size_t>(start)]) {
        p.cell_end[static_cast<std::size_t>(start)] = i;
        for (int k = start; k < i; ++k) p.cell_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(k)])] = start;
        if (start != x) ++p.cells;
        push(start);
        start = i;
      }
    }
  }

  void individualize(Partition& p, int v) const {
    const int start = p.cell_of[static_cast<std::size_t>(v)];
    const int end = p.cell_end[static_cast<std::size_t>(start)];
    auto first = p.lab.begin() + start;
    auto it = std::find(first, p.lab.begin() + end, v);
    std::rotate(first, it, it + 1);
    p.cell_end[static_cast<std::size_t>(start)] = start + 1;
    p.cell_end[static_cast<std::size_t>(start + 1)] = end;
    for (int k = start + 1; k < end; ++k) p.cell_of[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(k)])] = start + 1;
    ++p.cells;
  }

  // Returns the depth to unwind to; a value below `depth` aborts this node.
  int search(const Partition& p, int depth) {
    if (p.cells == n_) return leaf(p, depth);

    int target = 0;
    while (p.cell_end[static_cast<std::size_t>(target)] - target == 1) target = p.cell_end[static_cast<std::size_t>(target)];
    const int end = p.cell_end[static_cast<std::size_t>(target)];
    std::array<int, kMaxOrder> cell{};
    const int width = end - target;
    std::copy(p.lab.begin() + target, p.lab.begin() + end, cell.begin());
    std::sort(cell.begin(), cell.begin() + width);

    VertexSet explored = 0;
    std::vector<int> parent;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    for (int i = 0; i < width; ++i) {
      const int v = cell[static_cast<std::size_t>(i)];
      if (explored != 0) {
        if (gens_seen != generators_.size()) {
          parent.resize(static_cast<std::size_t>(n_));
          std::iota(parent.begin(), parent.end(), 0);
          for (const auto& gen : generators_) {
            if (fixes_prefix(gen, depth)) unite_by(parent, gen);
          }
          gens_seen = generators_.size();
        }
        bool redundant = false;
        for_each_vertex(explored, [&](int u) {
          if (find(parent, u) == find(parent, v)) redundant = true;
        });
        if (redundant) continue;
      }
      explored |= bit(v);

      Partition child = p;
      individualize(child, v);
      refine(child, p.cell_of[static_cast<std::size_t>(v)]);
      prefix_[static_cast<std::size_t>(depth)] = v;
      const int unwind = search(child, depth + 1);
      if (unwind < depth) return unwind;
    }
    return depth;
  }

  bool fixes_prefix(const std::vector<int>& gen, int depth) const {
    for (int i = 0; i < depth; ++i) {
      const int v = prefix_[static_cast<std::size_t>(i)];
      if (gen[static_cast<std::size_t>(v)] != v) return false;
    }
    return true;
  }

  int leaf(const Partition& p, int depth) {
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = i;
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      VertexSet row = 0;
      for_each_vertex(g_.neighbors(p.lab[static_cast<std::size_t>(i)]),
                      [&](int w) { row |= bit(pos[static_cast<std::size_t>(w)]); });
      rows[static_cast<std::size_t>(i)] = row;
    }

    if (!have_leaf_) {
      have_leaf_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_rows_ = best_rows_ = rows;
      first_prefix_ = best_prefix_ = prefix_;
      return depth;
    }

    const auto cmp = std::lexicographical_compare_three_way(
        rows.begin(), rows.begin() + n_, best_rows_.begin(), best_rows_.begin() + n_);
    if (std::equal(rows.begin(), rows.begin() + n_, first_rows_.begin())) {
      record_automorphism(pos, first_lab_);
      return common_prefix(first_prefix_, depth);
    }
    if (cmp == 0) {
      record_automorphism(pos, best_lab_);
      return common_prefix(best_prefix_, depth);
    }
    if (cmp < 0) {
      best_lab_ = p.lab;
      best_rows_ = rows;
      best_prefix_ = prefix_;
    }
    return depth;
  }

  void record_automorphism(const std::array<int, kMaxOrder>& pos, const std::array<int, kMaxOrder>& other_lab) {
    std::vector<int> gen(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) gen[static_cast<std::size_t>(v)] = other_lab[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])];
    generators_.push_back(std::move(gen));
  }

  int common_prefix(const std::array<int, kMaxOrder>& other, int depth) const {
    int d = 0;
    while (d < depth && other[static_cast<std::size_t>(d)] == prefix_[static_cast<std::size_t>(d)]) ++d;
    return d;
  }

  const Graph& g_;
  const int n_;
  std::array<int, kMaxOrder> prefix_{};

  bool have_leaf_ = false;
  std::array<int, kMaxOrder> first_lab_{};
  std::array<int, kMaxOrder> best_lab_{};
  Rows first_rows_{};
  Rows best_rows_{};
  std::array<int, kMaxOrder> first_prefix_{};
  std::array<int, kMaxOrder> best_prefix_{};
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

CanonicalCert canonical_cert(const Graph& g) { return CanonicalCert{graph6_encode(canonical_form(g))}; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace detourlab
