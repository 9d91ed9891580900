#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Graph container: exact Gaussian elimination,
// characteristic polynomials with Descartes' rule of signs, principal minors
// and brute-force graph searches.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "twodist/graphs/graph.hpp"
#include "twodist/linalg/matrix.hpp"

namespace oracle {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

struct Counts {
  int pos = 0, neg = 0, zero = 0;
};

inline QMat to_q(const twodist::SymmetricMatrix& m) {
  QMat out(m.size(), QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = Q(m(i, j));  // doubles convert exactly
  return out;
}

inline QMat adjacency(const twodist::Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  QMat out(n, QVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(static_cast<int>(i), static_cast<int>(j))) out[i][j] = 1;
  return out;
}

inline QMat identity(std::size_t n) {
  QMat out(n, QVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

inline QMat mul(const QMat& a, const QMat& b) {
  const std::size_t n = a.size();
  QMat out(n, QVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// Row echelon form in place; returns the rank.
inline int echelon(QMat& m, std::size_t cols) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Q f = m[r][c] / m[row][c];
      for (std::size_t k = c; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    ++row;
  }
  return static_cast<int>(row);
}

inline int rank(QMat m) { return echelon(m, m.empty() ? 0 : m[0].size()); }

/// Some solution of M x = v, or nullopt when inconsistent.
inline std::optional<QVec> solve(const QMat& m, const QVec& v) {
  const std::size_t n = m.size();
  QMat aug(n, QVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m[i].begin(), m[i].end(), aug[i].begin());
    aug[i][n] = v[i];
  }
  echelon(aug, n);
  QVec x(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t lead = 0;
    while (lead < n && aug[r][lead] == 0) ++lead;
    if (lead == n) {
      if (aug[r][n] != 0) return std::nullopt;
      continue;
    }
    x[lead] = aug[r][n] / aug[r][lead];
  }
  return x;
}

inline Q det(QMat m) {
  const std::size_t n = m.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

/// Coefficients c[0..n] of det(xI - M) = sum c[i] x^i (Faddeev-LeVerrier).
inline QVec char_poly(const QMat& a) {
  const std::size_t n = a.size();
  QVec c(n + 1, 0);
  c[n] = 1;
  QMat mk(n, QVec(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    QMat next = mul(a, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    const QMat am = mul(a, mk);
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

inline int sign_changes(const QVec& coeffs) {
  int changes = 0, last = 0;
  for (const Q& x : coeffs) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Inertia of a symmetric matrix from its characteristic polynomial. The
/// polynomial is real-rooted, so Descartes' rule counts roots exactly.
inline Counts inertia(const QMat& a) {
  const QVec c = char_poly(a);
  Counts out;
  while (out.zero < static_cast<int>(c.size()) && c[static_cast<std::size_t>(out.zero)] == 0) ++out.zero;
  out.pos = sign_changes(c);
  out.neg = static_cast<int>(a.size()) - out.pos - out.zero;
  return out;
}

/// PSD iff every principal minor is non-negative.
inline bool psd_by_minors(const QMat& a) {
  const std::size_t n = a.size();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) idx.push_back(i);
    QMat sub(idx.size(), QVec(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = a[idx[i]][idx[j]];
    if (det(sub) < 0) return false;
  }
  return true;
}

inline int brute_independence(const twodist::Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1U) && (mask >> v & 1U) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline bool brute_clique(const twodist::Graph& g, int t) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != t) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1U) && (mask >> v & 1U) && !g.adjacent(u, v)) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Upper-triangle bit string in column order (0,1),(0,2),(1,2),(0,3),...
inline std::uint64_t code_of(const twodist::Graph& g, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1U : 0U);
  return code;
}

/// Smallest code over all n! relabelings.
inline std::uint64_t brute_canonical_code(const twodist::Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = code_of(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, code_of(g, perm));
  return best;
}

inline twodist::SymmetricMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  twodist::SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, dist(rng));
  return m;
}

}  // namespace oracle
