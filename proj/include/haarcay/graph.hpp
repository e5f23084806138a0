#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "haarcay/bitset.hpp"
#include "haarcay/perm.hpp"

namespace haarcay {

/// Undirected simple graph with bitset adjacency rows and neighbor lists.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const std::pair<Point, Point>> edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  /// Adds {u,v}; loops are rejected and repeated edges ignored.
  void add_edge(Point u, Point v);
  bool adjacent(Point u, Point v) const noexcept { return adj_[u].test(v); }
  const Bitset &row(Point v) const noexcept { return adj_[v]; }
  const std::vector<Point> &neighbors(Point v) const noexcept { return nbrs_[v]; }
  std::size_t degree(Point v) const noexcept { return nbrs_[v].size(); }
  /// Common degree if every vertex has it.
  std::optional<std::size_t> regular_degree() const;

  void set_labels(std::vector<std::string> labels);
  const std::vector<std::string> &labels() const noexcept { return labels_; }

  std::vector<std::pair<Point, Point>> edges() const;
  bool is_automorphism(const Permutation &p) const;
  /// True when `map` (vertex of *this -> vertex of other) preserves adjacency
  /// in both directions.
  bool is_isomorphism_to(const Graph &other, std::span<const Point> map) const;
  Graph relabeled(const Permutation &p) const;
  Graph complement() const;

  bool operator==(const Graph &o) const { return adj_ == o.adj_; }

private:
  std::vector<Bitset> adj_;
  std::vector<std::vector<Point>> nbrs_;
  std::vector<std::string> labels_;
  std::size_t edges_ = 0;
};

/// Per-vertex color classes; automorphisms and isomorphisms must preserve them.
struct VertexColoring {
  std::vector<std::uint32_t> color;
};

inline constexpr std::size_t kDefaultGraphBound = 1000;

struct AutomorphismSearchResult {
  std::vector<Permutation> generators; ///< each re-verified against the graph
  std::vector<Point> base;             ///< individualized vertices on the first path
  BigInt order;
};

/// Generators and order of Aut(X) (color-preserving when a coloring is given),
/// by equitable-partition refinement plus individualization backtracking with
/// orbit pruning.
AutomorphismSearchResult automorphism_search(const Graph &x,
                                             const std::optional<VertexColoring> &coloring = {},
                                             std::size_t bound = kDefaultGraphBound);
PermGroup automorphism_group(const Graph &x,
                             const std::optional<VertexColoring> &coloring = {},
                             std::size_t bound = kDefaultGraphBound);

/// A verified isomorphism X -> Y as a vertex map, or nullopt.
std::optional<std::vector<Point>> is_isomorphic(const Graph &x, const Graph &y,
                                                std::size_t bound = kDefaultGraphBound);
/// Isomorphism mapping color class c of X onto color class c of Y.
std::optional<std::vector<Point>> find_colored_isomorphism(const Graph &x,
                                                           const VertexColoring &cx,
                                                           const Graph &y,
                                                           const VertexColoring &cy,
                                                           std::size_t bound = kDefaultGraphBound);

struct Bipartition {
  bool bipartite = false;
  std::vector<std::uint8_t> side; ///< 0/1 per vertex when bipartite
  std::vector<Point> odd_cycle;   ///< certificate when not bipartite
  std::vector<Point> class0() const;
  std::vector<Point> class1() const;
};

/// Two-coloring with the lowest vertex of each component on side 0, or an odd
/// cycle certificate.
Bipartition try_bipartition(const Graph &x);
/// As try_bipartition but throws not_bipartite (with the cycle in the message).
Bipartition bipartition(const Graph &x);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Point>> components(const Graph &x);
bool is_connected(const Graph &x);

// Interchange formats ------------------------------------------------------------

std::string to_graph6(const Graph &x);
/// Parses one graph6 line (optional ">>graph6<<" header, trailing newline ok).
Graph from_graph6(std::string_view text);
std::string to_dot(const Graph &x, std::string_view name = "G");

} // namespace haarcay
