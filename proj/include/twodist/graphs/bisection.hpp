#pragma once

#include <vector>

#include "twodist/errors.hpp"
#include "twodist/graphs/graph.hpp"

namespace twodist {

enum class VertexSelector { max_degree, first };

/// Leaves of the depth-k neighbourhood split tree. Each nonempty node G is
/// split at a chosen vertex u into G_u (left) and G - N[u] (right); an empty
/// node yields two empty children.
struct BisectionReport {
  std::vector<Graph> leaves;  ///< 2^k graphs, left to right
  int root_order = 0;
  int split_vertices = 0;     ///< number of nonempty internal nodes
  int leaf_vertices = 0;

  /// |V(G)| = (#nonempty internal nodes) + sum of leaf orders; the first term
  /// equals 2^k - 1 when no internal node is empty.
  bool ledger_holds() const { return root_order == split_vertices + leaf_vertices; }
};

inline int select_vertex(const Graph& g, VertexSelector selector) {
  if (g.empty()) throw EmptySubsetError("cannot select a vertex of an empty graph");
  if (selector == VertexSelector::first) return 0;
  int best = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

inline BisectionReport neighborhood_bisection(const Graph& g, int k, VertexSelector selector = VertexSelector::max_degree) {
  if (k < 0) throw ParameterDomainError("bisection depth must be nonnegative");
  if (k > 20) throw SizeGuardError("bisection depth is capped at 20");
  BisectionReport report;
  report.root_order = g.order();
  std::vector<Graph> level{g};
  for (int depth = 0; depth < k; ++depth) {
    std::vector<Graph> next;
    next.reserve(level.size() * 2);
    for (const Graph& h : level) {
      if (h.empty()) {
        next.emplace_back(0);
        next.emplace_back(0);
        continue;
      }
      const int u = select_vertex(h, selector);
      ++report.split_vertices;
      const std::uint64_t closed = h.neighbors(u) | (std::uint64_t{1} << u);
      next.push_back(induced_mask(h, h.neighbors(u)));
      next.push_back(induced_mask(h, h.vertex_mask() & ~closed));
    }
    level = std::move(next);
  }
  for (const Graph& leaf : level) report.leaf_vertices += leaf.order();
  report.leaves = std::move(level);
  return report;
}

}  // namespace twodist
