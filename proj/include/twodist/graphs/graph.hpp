#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "twodist/errors.hpp"
#include "twodist/linalg/matrix.hpp"
#include "twodist/linalg/rational.hpp"

namespace twodist {

using VertexSet = std::vector<int>;

/// Undirected simple graph on vertices 0..n-1, stored as one 64-bit adjacency
/// row per vertex. Order 0 is allowed so that vertex-deletion procedures can
/// return empty results.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n) : rows_(static_cast<std::size_t>(check_order(n)), 0) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }

  bool adjacent(int u, int v) const { return (rows_[index(u)] >> index(v)) & 1U; }

  void add_edge(int u, int v) {
    if (u == v) throw ParameterDomainError("self-loops are not allowed");
    rows_[index(u)] |= bit(v);
    rows_[index(v)] |= bit(u);
  }

  void remove_edge(int u, int v) {
    rows_[index(u)] &= ~bit(v);
    rows_[index(v)] &= ~bit(u);
  }

  std::uint64_t neighbors(int u) const { return rows_[index(u)]; }
  int degree(int u) const { return std::popcount(rows_[index(u)]); }

  /// Mask with one bit per vertex.
  std::uint64_t vertex_mask() const {
    return order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order()) - 1;
  }

  int edge_count() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      for (int v = u + 1; v < order(); ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  Graph complement() const {
    Graph g(order());
    for (int u = 0; u < order(); ++u) g.rows_[static_cast<std::size_t>(u)] = vertex_mask() & ~rows_[index(u)] & ~bit(u);
    return g;
  }

  bool operator==(const Graph&) const = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxOrder) throw SizeGuardError("graph order must be in 0..64");
    return n;
  }
  std::size_t index(int u) const {
    if (u < 0 || u >= order()) throw ParameterDomainError("vertex " + std::to_string(u) + " out of range");
    return static_cast<std::size_t>(u);
  }
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::vector<std::uint64_t> rows_;
};

inline SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(static_cast<std::size_t>(g.order()));
  for (auto [u, v] : g.edges()) a.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), 1.0);
  return a;
}

inline RationalMatrix adjacency_matrix_exact(const Graph& g) {
  RationalMatrix a(static_cast<std::size_t>(g.order()));
  for (auto [u, v] : g.edges()) a.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), Rational(1));
  return a;
}

inline VertexSet mask_to_vertices(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

/// Induced subgraph on the vertices of `mask`, relabelled in ascending order.
/// May return the graph of order 0.
inline Graph induced_mask(const Graph& g, std::uint64_t mask) {
  const VertexSet vs = mask_to_vertices(mask & g.vertex_mask());
  Graph h(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.adjacent(vs[a], vs[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

inline Graph induced(const Graph& g, const VertexSet& vertices) {
  if (vertices.empty()) throw EmptySubsetError("induced subgraph needs a nonempty vertex set");
  std::uint64_t mask = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw ParameterDomainError("vertex out of range");
    mask |= std::uint64_t{1} << v;
  }
  return induced_mask(g, mask);
}

inline VertexSet open_neighborhood(const Graph& g, int u) { return mask_to_vertices(g.neighbors(u)); }

inline VertexSet closed_neighborhood(const Graph& g, int u) {
  return mask_to_vertices(g.neighbors(u) | (std::uint64_t{1} << u));
}

/// G_u: the subgraph induced by the open neighborhood of u.
inline Graph subgraph_on_neighbors(const Graph& g, int u) {
  if (g.neighbors(u) == 0) throw EmptySubsetError("vertex has no neighbors");
  return induced_mask(g, g.neighbors(u));
}

/// G - N[u]
inline Graph delete_closed(const Graph& g, int u) {
  const std::uint64_t rest = g.vertex_mask() & ~(g.neighbors(u) | (std::uint64_t{1} << u));
  if (rest == 0) throw EmptySubsetError("deleting the closed neighborhood leaves no vertices");
  return induced_mask(g, rest);
}

/// Vertex masks of the connected components, ordered by smallest vertex.
inline std::vector<std::uint64_t> component_masks(const Graph& g) {
  std::vector<std::uint64_t> out;
  std::uint64_t unseen = g.vertex_mask();
  while (unseen) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v : mask_to_vertices(frontier)) next |= g.neighbors(v);
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

inline std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (auto m : component_masks(g)) out.push_back(induced_mask(g, m));
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && component_masks(g).size() == 1; }

inline Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.order();
  Graph g(n);
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) g.add_edge(u + offset, v + offset);
    offset += p.order();
  }
  return g;
}

inline Graph complete_graph(int t) {
  Graph g(t);
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph cycle_graph(int n) {
  if (n < 3) throw ParameterDomainError("a cycle needs at least 3 vertices");
  Graph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace twodist
