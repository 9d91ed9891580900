#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "twodist/errors.hpp"
#include "twodist/graphs/canonical.hpp"
#include "twodist/graphs/graph.hpp"

namespace twodist {

enum class DedupMode { labeled, canonical };

inline constexpr int kCanonicalEnumerationMaxOrder = 8;
inline constexpr int kLabeledEnumerationMaxOrder = 7;

struct GraphFamily {
  std::vector<Graph> members;
  DedupMode dedup_mode = DedupMode::canonical;
};

/// Contiguous slice [index/count, (index+1)/count) of an ordered stream.
struct Partition {
  int index = 0;
  int count = 1;
};

namespace detail {

inline std::pair<std::uint64_t, std::uint64_t> slice(std::uint64_t total, const Partition& part) {
  if (part.count < 1 || part.index < 0 || part.index >= part.count) throw ParameterDomainError("invalid partition");
  const auto c = static_cast<std::uint64_t>(part.count);
  const auto i = static_cast<std::uint64_t>(part.index);
  return {total * i / c, total * (i + 1) / c};
}

}  // namespace detail

/// Pairwise non-isomorphic graphs on exactly n vertices, each in canonical
/// labelling, sorted by canonical key. Built by adding one vertex with every
/// possible neighbourhood to each graph of order n-1.
inline std::vector<Graph> canonical_graphs(int n) {
  if (n < 1 || n > kCanonicalEnumerationMaxOrder) throw SizeGuardError("canonical enumeration supports 1 <= n <= 8");
  std::vector<Graph> level{Graph(1)};
  for (int k = 1; k < n; ++k) {
    std::unordered_map<std::uint64_t, Graph> seen;
    for (const Graph& g : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Graph h(k + 1);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (int u : mask_to_vertices(mask)) h.add_edge(u, k);
        CanonicalForm c = canonical_form(h);
        seen.try_emplace(c.key, std::move(c.graph));
      }
    }
    std::vector<std::pair<std::uint64_t, Graph>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, g] : sorted) level.push_back(std::move(g));
  }
  return level;
}

/// Canonical graphs of every order 1..n_max, ascending by order then key.
inline std::vector<Graph> canonical_graphs_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto level = canonical_graphs(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

/// Streams graphs on exactly n vertices. Labeled mode walks all 2^(n(n-1)/2)
/// adjacency strings in ascending order; canonical mode walks canonical_graphs(n).
/// A partition restricts the walk to a contiguous slice, which for labeled mode
/// is a range of adjacency-string prefixes.
inline void for_each_graph(int n, bool connected_only, DedupMode mode, const std::function<void(const Graph&)>& visit,
                           Partition part = {}) {
  if (mode == DedupMode::canonical) {
    const auto all = canonical_graphs(n);
    const auto [lo, hi] = detail::slice(all.size(), part);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Graph& g = all[i];
      if (!connected_only || is_connected(g)) visit(g);
    }
    return;
  }
  if (n < 1 || n > kLabeledEnumerationMaxOrder) throw SizeGuardError("labeled enumeration supports 1 <= n <= 7");
  const int bits = n * (n - 1) / 2;
  const auto [lo, hi] = detail::slice(std::uint64_t{1} << bits, part);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  for (std::uint64_t code = lo; code < hi; ++code) {
    Graph g(n);
    for (int b = 0; b < bits; ++b)
      if ((code >> (bits - 1 - b)) & 1U) g.add_edge(pairs[static_cast<std::size_t>(b)].first, pairs[static_cast<std::size_t>(b)].second);
    if (!connected_only || is_connected(g)) visit(g);
  }
}

inline GraphFamily enumerate_graphs(int n, bool connected_only, DedupMode mode) {
  GraphFamily family;
  family.dedup_mode = mode;
  for_each_graph(n, connected_only, mode, [&](const Graph& g) { family.members.push_back(g); });
  return family;
}

}  // namespace twodist
