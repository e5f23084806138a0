// Automorphism and isomorphism search by individualization and refinement.
//
// Nodes of the search tree are equitable ordered partitions. Refinement splits
// cells by neighbor counts into a splitter cell; the resulting cell boundaries
// and a running trace hash are invariant under isomorphism, so the trace is
// used only to prune. Every candidate map is checked edge by edge before it is
// accepted.

#include <algorithm>
#include <deque>
#include <numeric>

#include "haarcay/error.hpp"
#include "haarcay/graph.hpp"

namespace haarcay {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + v;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Partition {
  std::vector<Point> lab;            // vertices in cell order
  std::vector<std::uint32_t> pos;    // vertex -> index in lab
  std::vector<std::uint32_t> cell;   // vertex -> start of its cell
  std::vector<std::uint32_t> end;    // cell start -> one past its last position
  std::size_t cells = 0;
  std::uint64_t trace = 0;

  bool discrete() const { return cells == lab.size(); }

  /// Start of the first smallest non-singleton cell.
  std::optional<std::uint32_t> target_cell() const {
    std::optional<std::uint32_t> best;
    std::uint32_t best_size = 0;
    for (std::uint32_t s = 0; s < lab.size(); s = end[s]) {
      const auto size = end[s] - s;
      if (size > 1 && (!best || size < best_size)) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }
};

class Refiner {
public:
  explicit Refiner(const Graph &g) : g_(g), count_(g.vertex_count(), 0), queued_(g.vertex_count(), 0) {}

  Partition initial(const std::vector<std::uint32_t> &color) {
    const auto n = g_.vertex_count();
    Partition p;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), Point{0});
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](Point a, Point b) { return color[a] < color[b]; });
    p.pos.resize(n);
    p.cell.resize(n);
    p.end.assign(n, 0);
    std::vector<std::uint32_t> starts;
    for (std::uint32_t i = 0; i < n; ++i) {
      p.pos[p.lab[i]] = i;
      if (i == 0 || color[p.lab[i]] != color[p.lab[i - 1]]) starts.push_back(i);
      p.cell[p.lab[i]] = starts.back();
    }
    for (std::size_t k = 0; k < starts.size(); ++k) {
      p.end[starts[k]] = k + 1 < starts.size() ? starts[k + 1] : static_cast<std::uint32_t>(n);
      p.trace = mix(p.trace, p.end[starts[k]] - starts[k]);
    }
    p.cells = starts.size();
    refine(p, starts);
    return p;
  }

  Partition individualize(const Partition &parent, Point v) {
    Partition p = parent;
    const std::uint32_t s = p.cell[v];
    const std::uint32_t at = p.pos[v];
    std::swap(p.lab[s], p.lab[at]);
    p.pos[p.lab[at]] = at;
    p.pos[v] = s;
    const std::uint32_t e = p.end[s];
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i) p.cell[p.lab[i]] = s + 1;
    ++p.cells;
    p.trace = mix(p.trace, 0xabcdefULL + s);
    std::vector<std::uint32_t> start{s};
    refine(p, start);
    return p;
  }

private:
  void refine(Partition &p, const std::vector<std::uint32_t> &initial_queue) {
    std::deque<std::uint32_t> queue;
    for (auto s : initial_queue) {
      queue.push_back(s);
      queued_[s] = 1;
    }
    std::vector<Point> touched;
    std::vector<std::uint32_t> touched_cells;
    while (!queue.empty()) {
      const std::uint32_t w = queue.front();
      queue.pop_front();
      queued_[w] = 0;
      const std::uint32_t w_end = p.end[w];

      touched.clear();
      for (std::uint32_t i = w; i < w_end; ++i)
        for (Point nb : g_.neighbors(p.lab[i]))
          if (count_[nb]++ == 0) touched.push_back(nb);

      touched_cells.clear();
      for (Point v : touched) touched_cells.push_back(p.cell[v]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()),
                          touched_cells.end());

      p.trace = mix(p.trace, w);
      for (std::uint32_t c : touched_cells) {
        const std::uint32_t e = p.end[c];
        p.trace = mix(p.trace, c);
        if (e - c == 1) {
          p.trace = mix(p.trace, count_[p.lab[c]]);
          continue;
        }
        std::sort(p.lab.begin() + c, p.lab.begin() + e, [&](Point a, Point b) {
          return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
        });
        std::uint32_t sub = c;
        for (std::uint32_t i = c; i < e; ++i) {
          const Point v = p.lab[i];
          p.pos[v] = i;
          if (i > c && count_[v] != count_[p.lab[i - 1]]) {
            p.end[sub] = i;
            p.trace = mix(p.trace, (std::uint64_t{count_[p.lab[i - 1]]} << 32) | (i - sub));
            sub = i;
            ++p.cells;
          }
          p.cell[v] = sub;
        }
        p.end[sub] = e;
        p.trace = mix(p.trace, (std::uint64_t{count_[p.lab[e - 1]]} << 32) | (e - sub));
        if (sub != c) {
          for (std::uint32_t s = c; s < e; s = p.end[s])
            if (!queued_[s]) {
              queued_[s] = 1;
              queue.push_back(s);
            }
        }
      }
      for (Point v : touched) count_[v] = 0;
    }
    p.trace = mix(p.trace, p.cells);
  }

  const Graph &g_;
  std::vector<std::uint32_t> count_;
  std::vector<char> queued_;
};

struct PathNode {
  Partition partition;
  std::uint32_t target = 0; // start of target cell (unused at the leaf)
};

/// Shared machinery: the first path of a reference graph, and a DFS that looks
/// for a leaf of some (possibly different) graph matching the first leaf.
class FirstPath {
public:
  FirstPath(const Graph &g, const std::vector<std::uint32_t> &color) : g_(g), refiner_(g) {
    Partition p = refiner_.initial(color);
    while (true) {
      auto target = p.target_cell();
      if (!target) {
        nodes_.push_back({std::move(p), 0});
        break;
      }
      const Point v = min_in_cell(p, *target);
      base_.push_back(v);
      Partition child = refiner_.individualize(p, v);
      nodes_.push_back({std::move(p), *target});
      p = std::move(child);
    }
  }

  std::size_t depth() const { return base_.size(); }
  const std::vector<Point> &base() const { return base_; }
  const PathNode &node(std::size_t d) const { return nodes_[d]; }
  const Partition &leaf() const { return nodes_.back().partition; }

  static Point min_in_cell(const Partition &p, std::uint32_t start) {
    return *std::min_element(p.lab.begin() + start, p.lab.begin() + p.end[start]);
  }
  static std::vector<Point> cell_members(const Partition &p, std::uint32_t start) {
    std::vector<Point> out(p.lab.begin() + start, p.lab.begin() + p.end[start]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Depth-first search below `p` (a node of `other` at depth d) for a leaf
  /// whose induced map from the first leaf is an isomorphism g_ -> other.
  std::optional<std::vector<Point>> match(const Graph &other, Refiner &other_refiner,
                                          const Partition &p, std::size_t d) const {
    const Partition &ref = nodes_[d].partition;
    if (p.trace != ref.trace || p.cells != ref.cells) return std::nullopt;
    if (p.discrete()) {
      std::vector<Point> map(g_.vertex_count());
      const auto &leaf_lab = ref.lab;
      for (std::size_t q = 0; q < map.size(); ++q) map[leaf_lab[q]] = p.lab[q];
      if (g_.is_isomorphism_to(other, map)) return map;
      return std::nullopt;
    }
    if (d >= depth()) return std::nullopt;
    auto target = p.target_cell();
    if (!target || *target != nodes_[d].target) return std::nullopt;
    for (Point w : cell_members(p, *target)) {
      Partition child = other_refiner.individualize(p, w);
      if (auto m = match(other, other_refiner, child, d + 1)) return m;
    }
    return std::nullopt;
  }

  Refiner &refiner() { return refiner_; }

private:
  const Graph &g_;
  Refiner refiner_;
  std::vector<PathNode> nodes_;
  std::vector<Point> base_;
};

std::vector<std::uint32_t> colors_or_default(const Graph &x,
                                             const std::optional<VertexColoring> &c) {
  if (!c) return std::vector<std::uint32_t>(x.vertex_count(), 0);
  if (c->color.size() != x.vertex_count())
    fail(ErrorCode::invalid_parameter, "coloring length does not match vertex count");
  return c->color;
}

void check_bound(const Graph &x, std::size_t bound) {
  if (x.vertex_count() > bound)
    fail(ErrorCode::resource_limit, "graph has " + std::to_string(x.vertex_count()) +
                                        " vertices, bound is " + std::to_string(bound));
}

} // namespace

AutomorphismSearchResult automorphism_search(const Graph &x,
                                             const std::optional<VertexColoring> &coloring,
                                             std::size_t bound) {
  check_bound(x, bound);
  const auto n = x.vertex_count();
  const auto color = colors_or_default(x, coloring);
  FirstPath path(x, color);
  Refiner refiner(x);

  AutomorphismSearchResult result;
  result.base = path.base();
  result.order = 1;

  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto absorb = [&](const Permutation &g) {
    for (Point v = 0; v < n; ++v) {
      auto a = find(v), b = find(g(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  };

  for (std::size_t level = path.depth(); level-- > 0;) {
    const PathNode &node = path.node(level);
    const Point v = path.base()[level];
    std::vector<Point> rejected;
    for (Point w : FirstPath::cell_members(node.partition, node.target)) {
      if (w == v || find(w) == find(v)) continue;
      bool known_bad = false;
      for (Point r : rejected) known_bad = known_bad || find(r) == find(w);
      if (known_bad) continue;
      Partition child = refiner.individualize(node.partition, w);
      auto map = path.match(x, refiner, child, level + 1);
      if (!map) {
        rejected.push_back(w);
        continue;
      }
      Permutation g(std::move(*map));
      if (!x.is_automorphism(g))
        fail(ErrorCode::internal_verification_failure, "search produced a non-automorphism");
      for (Point u = 0; u < n; ++u)
        if (color[g(u)] != color[u])
          fail(ErrorCode::internal_verification_failure, "automorphism breaks the coloring");
      absorb(g);
      result.generators.push_back(std::move(g));
    }
    std::size_t orbit = 0;
    for (Point w : FirstPath::cell_members(node.partition, node.target))
      if (find(w) == find(v)) ++orbit;
    result.order *= orbit;
  }
  return result;
}

PermGroup automorphism_group(const Graph &x, const std::optional<VertexColoring> &coloring,
                             std::size_t bound) {
  auto r = automorphism_search(x, coloring, bound);
  return PermGroup(x.vertex_count(), std::move(r.generators), std::move(r.base), r.order);
}

std::optional<std::vector<Point>> find_colored_isomorphism(const Graph &x,
                                                           const VertexColoring &cx,
                                                           const Graph &y,
                                                           const VertexColoring &cy,
                                                           std::size_t bound) {
  check_bound(x, bound);
  check_bound(y, bound);
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count())
    return std::nullopt;
  auto colx = colors_or_default(x, cx), coly = colors_or_default(y, cy);
  {
    auto a = colx, b = coly;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  FirstPath path(x, colx);
  Refiner refiner(y);
  Partition root = refiner.initial(coly);
  auto map = path.match(y, refiner, root, 0);
  if (map) {
    if (!x.is_isomorphism_to(y, *map))
      fail(ErrorCode::internal_verification_failure, "search produced a non-isomorphism");
    for (Point u = 0; u < x.vertex_count(); ++u)
      if (colx[u] != coly[(*map)[u]])
        fail(ErrorCode::internal_verification_failure, "isomorphism breaks the coloring");
  }
  return map;
}

std::optional<std::vector<Point>> is_isomorphic(const Graph &x, const Graph &y,
                                                std::size_t bound) {
  VertexColoring cx{std::vector<std::uint32_t>(x.vertex_count(), 0)};
  VertexColoring cy{std::vector<std::uint32_t>(y.vertex_count(), 0)};
  return find_colored_isomorphism(x, cx, y, cy, bound);
}

} // namespace haarcay
