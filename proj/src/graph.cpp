#include "haarcay/graph.hpp"

#include <algorithm>
#include <sstream>

#include "haarcay/error.hpp"

namespace haarcay {

Graph::Graph(std::size_t n) : adj_(n, Bitset(n)), nbrs_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Point, Point>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Point u, Point v) {
  if (u >= vertex_count() || v >= vertex_count())
    fail(ErrorCode::invalid_parameter, "edge endpoint out of range");
  if (u == v) fail(ErrorCode::invalid_parameter, "loops are not allowed");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  nbrs_[u].push_back(v);
  nbrs_[v].push_back(u);
  ++edges_;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adj_.empty()) return 0;
  const auto d = degree(0);
  for (Point v = 1; v < vertex_count(); ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count())
    fail(ErrorCode::invalid_parameter, "label count does not match vertex count");
  labels_ = std::move(labels);
}

std::vector<std::pair<Point, Point>> Graph::edges() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point u = 0; u < vertex_count(); ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, static_cast<Point>(v));
    });
  return out;
}

bool Graph::is_automorphism(const Permutation &p) const {
  return p.degree() == vertex_count() && is_isomorphism_to(*this, p.images());
}

bool Graph::is_isomorphism_to(const Graph &other, std::span<const Point> map) const {
  if (other.vertex_count() != vertex_count() || map.size() != vertex_count() ||
      other.edge_count() != edge_count())
    return false;
  std::vector<char> seen(vertex_count());
  for (auto v : map)
    if (v >= vertex_count() || seen[v]++) return false;
  // Equal edge counts plus an injective edge map make it a bijection on edges.
  for (Point u = 0; u < vertex_count(); ++u)
    for (auto v : nbrs_[u])
      if (!other.adjacent(map[u], map[v])) return false;
  return true;
}

Graph Graph::relabeled(const Permutation &p) const {
  Graph g(vertex_count());
  for (auto [u, v] : edges()) g.add_edge(p(u), p(v));
  return g;
}

Graph Graph::complement() const {
  Graph g(vertex_count());
  for (Point u = 0; u < vertex_count(); ++u)
    for (Point v = u + 1; v < vertex_count(); ++v)
      if (!adjacent(u, v)) g.add_edge(u, v);
  return g;
}

// Bipartition / connectivity --------------------------------------------------------

std::vector<Point> Bipartition::class0() const {
  std::vector<Point> out;
  for (Point v = 0; v < side.size(); ++v)
    if (side[v] == 0) out.push_back(v);
  return out;
}

std::vector<Point> Bipartition::class1() const {
  std::vector<Point> out;
  for (Point v = 0; v < side.size(); ++v)
    if (side[v] == 1) out.push_back(v);
  return out;
}

Bipartition try_bipartition(const Graph &x) {
  const auto n = x.vertex_count();
  Bipartition result;
  std::vector<int> side(n, -1);
  std::vector<long> parent(n, -1);
  for (Point s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Point> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Point u = queue[qi];
      for (Point v : x.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          // Odd cycle: paths from u and v up to their common ancestor.
          std::vector<Point> pu{u}, pv{v};
          auto depth = [&](Point w) {
            std::size_t d = 0;
            while (parent[w] >= 0) {
              w = static_cast<Point>(parent[w]);
              ++d;
            }
            return d;
          };
          auto du = depth(u), dv = depth(v);
          Point a = u, b = v;
          while (du > dv) { a = static_cast<Point>(parent[a]); pu.push_back(a); --du; }
          while (dv > du) { b = static_cast<Point>(parent[b]); pv.push_back(b); --dv; }
          while (a != b) {
            a = static_cast<Point>(parent[a]);
            b = static_cast<Point>(parent[b]);
            pu.push_back(a);
            pv.push_back(b);
          }
          pv.pop_back(); // common ancestor already in pu
          result.odd_cycle = pu;
          result.odd_cycle.insert(result.odd_cycle.end(), pv.rbegin(), pv.rend());
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  result.side.assign(side.begin(), side.end());
  return result;
}

Bipartition bipartition(const Graph &x) {
  auto b = try_bipartition(x);
  if (!b.bipartite) {
    std::ostringstream os;
    os << "graph is not bipartite; odd cycle:";
    for (auto v : b.odd_cycle) os << ' ' << v;
    fail(ErrorCode::not_bipartite, os.str());
  }
  return b;
}

std::vector<std::vector<Point>> components(const Graph &x) {
  const auto n = x.vertex_count();
  std::vector<char> seen(n);
  std::vector<std::vector<Point>> out;
  for (Point s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<Point> comp{s};
    for (std::size_t qi = 0; qi < comp.size(); ++qi)
      for (Point v : x.neighbors(comp[qi]))
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph &x) { return components(x).size() <= 1; }

// graph6 / DOT -----------------------------------------------------------------------

namespace {

void encode_size(std::string &out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

} // namespace

std::string to_graph6(const Graph &x) {
  const auto n = x.vertex_count();
  std::string out;
  encode_size(out, n);
  int acc = 0, bits = 0;
  for (Point j = 1; j < n; ++j)
    for (Point i = 0; i < j; ++i) {
      acc = (acc << 1) | (x.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  auto byte = [&](std::size_t i) -> int {
    if (i >= text.size()) fail(ErrorCode::parse_error, "graph6: truncated input");
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) fail(ErrorCode::parse_error, "graph6: byte out of range");
    return c - 63;
  };
  std::size_t n = 0, p = 0;
  if (text.empty()) fail(ErrorCode::parse_error, "graph6: empty input");
  if (byte(0) < 63) {
    n = static_cast<std::size_t>(byte(0));
    p = 1;
  } else if (byte(1) < 63) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(byte(i));
    p = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(byte(i));
    p = 8;
  }
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t expected = p + (pairs + 5) / 6;
  if (text.size() != expected)
    fail(ErrorCode::parse_error, "graph6: wrong length for " + std::to_string(n) + " vertices");
  Graph g(n);
  std::size_t k = 0;
  for (Point j = 1; j < n; ++j)
    for (Point i = 0; i < j; ++i, ++k) {
      const int chunk = byte(p + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

std::string to_dot(const Graph &x, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Point v = 0; v < x.vertex_count(); ++v) {
    os << "  " << v;
    if (!x.labels().empty()) os << " [label=\"" << x.labels()[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : x.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace haarcay
