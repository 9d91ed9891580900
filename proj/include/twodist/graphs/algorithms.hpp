#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

#include "twodist/errors.hpp"
#include "twodist/graphs/graph.hpp"
#include "twodist/linalg/eigen.hpp"

namespace twodist {

inline constexpr int kIndependenceMaxOrder = 32;

namespace detail {

inline int max_independent(const Graph& g, std::uint64_t cand, int found, int best) {
  if (cand == 0) return std::max(found, best);
  if (found + std::popcount(cand) <= best) return best;
  // A vertex with at most one candidate neighbour can always be taken.
  for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (std::popcount(g.neighbors(v) & cand) <= 1)
      return max_independent(g, cand & ~(g.neighbors(v) | (std::uint64_t{1} << v)), found + 1, best);
  }
  int pivot = std::countr_zero(cand);
  for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (std::popcount(g.neighbors(v) & cand) > std::popcount(g.neighbors(pivot) & cand)) pivot = v;
  }
  const std::uint64_t pbit = std::uint64_t{1} << pivot;
  best = max_independent(g, cand & ~(g.neighbors(pivot) | pbit), found + 1, best);
  return max_independent(g, cand & ~pbit, found, best);
}

inline bool extend_clique(const Graph& g, std::uint64_t cand, int size, int target) {
  if (size >= target) return true;
  if (size + std::popcount(cand) < target) return false;
  for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    // only later vertices, so every clique is explored once
    const std::uint64_t later = rest & ~((std::uint64_t{1} << v) | ((std::uint64_t{1} << v) - 1));
    if (extend_clique(g, later & g.neighbors(v), size + 1, target)) return true;
  }
  return false;
}

}  // namespace detail

/// Exact independence number by branch and bound.
inline int independence_number(const Graph& g) {
  if (g.order() > kIndependenceMaxOrder) throw SizeGuardError("independence_number supports n <= 32");
  return detail::max_independent(g, g.vertex_mask(), 0, 0);
}

/// True iff K_t is a subgraph of G.
inline bool contains_clique(const Graph& g, int t) {
  if (t < 1) throw ParameterDomainError("clique size must be at least 1");
  return detail::extend_clique(g, g.vertex_mask(), 0, t);
}

struct SmallestEigenvalueCheck {
  bool holds = false;
  double lhs = 0.0;  ///< smallest adjacency eigenvalue
  double rhs = 0.0;  ///< -sqrt(floor(n/2) * ceil(n/2))
};

/// Lower bound on the smallest adjacency eigenvalue of a connected graph.
inline SmallestEigenvalueCheck check_lemma_smallest_eigenvalue(const Graph& g, double tol = 1e-9) {
  if (!is_connected(g)) throw NotConnectedError("smallest-eigenvalue bound needs a connected graph");
  const int n = g.order();
  const SymmetricMatrix a = adjacency_matrix(g);
  SmallestEigenvalueCheck out;
  out.lhs = eigen_decompose(a).smallest();
  out.rhs = -std::sqrt(static_cast<double>((n / 2) * ((n + 1) / 2)));
  out.holds = out.lhs >= out.rhs - scaled_tolerance(a, tol);
  return out;
}

}  // namespace twodist
