#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "twodist/errors.hpp"
#include "twodist/graphs/graph.hpp"

namespace twodist {

inline constexpr int kCanonicalMaxOrder = 10;

/// The upper triangle in graph6 order read as a binary number, first pair
/// most significant. Needs n <= 11.
inline std::uint64_t adjacency_key(const Graph& g) {
  if (g.order() > 11) throw SizeGuardError("adjacency_key supports n <= 11");
  std::uint64_t key = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(i, j) ? 1U : 0U);
  return key;
}

/// Relabels so that new vertex k is old vertex labeling[k].
inline Graph relabel(const Graph& g, const std::vector<int>& labeling) {
  Graph h(g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.adjacent(labeling[static_cast<std::size_t>(a)], labeling[static_cast<std::size_t>(b)])) h.add_edge(a, b);
  return h;
}

struct CanonicalForm {
  Graph graph;
  std::uint64_t key = 0;
  std::vector<int> labeling;
};

namespace detail {

/// Isomorphism-invariant vertex colouring: start from degrees, then refine by
/// the multiset of neighbour colours until the number of classes is stable.
inline std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = color[static_cast<std::size_t>(v)];
      for (int w : mask_to_vertices(g.neighbors(v))) s.second.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(s.second.begin(), s.second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return color;
}

struct CanonicalSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<int> slot_color;  // colour required at each position
  std::vector<int> color;
  std::vector<int> perm;
  std::vector<int> best_perm;
  std::uint64_t best = 0;
  bool have_best = false;

  void run(int pos, std::uint64_t used, std::uint64_t key, int bits) {
    if (pos == n) {
      if (!have_best || key < best) {
        best = key;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      if (color[static_cast<std::size_t>(v)] != slot_color[static_cast<std::size_t>(pos)]) continue;
      std::uint64_t next = key;
      for (int i = 0; i < pos; ++i) next = (next << 1) | (g.adjacent(perm[static_cast<std::size_t>(i)], v) ? 1U : 0U);
      const int next_bits = bits + pos;
      if (have_best && next > (best >> (total_bits - next_bits))) continue;
      perm[static_cast<std::size_t>(pos)] = v;
      run(pos + 1, used | (std::uint64_t{1} << v), next, next_bits);
    }
  }
};

}  // namespace detail

/// Canonical labelling: the minimum adjacency key over all vertex orders that
/// list the refined colour classes in ascending order. Exhaustive within
/// classes, with prefix pruning against the best key found so far.
inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder) throw SizeGuardError("canonical_form supports n <= 10");
  detail::CanonicalSearch search{g, n, n * (n - 1) / 2, {}, detail::refined_colors(g), std::vector<int>(static_cast<std::size_t>(n)), {}, 0, false};
  search.slot_color = search.color;
  std::sort(search.slot_color.begin(), search.slot_color.end());
  search.run(0, 0, 0, 0);
  CanonicalForm out;
  out.labeling = search.best_perm;
  out.graph = relabel(g, out.labeling);
  out.key = search.best;
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).key == canonical_form(b).key;
}

}  // namespace twodist
