#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "twodist/errors.hpp"
#include "twodist/linalg/matrix.hpp"

namespace twodist {

inline constexpr int kDefaultJacobiSweeps = 100;

/// Eigenpairs of a symmetric matrix, eigenvalues sorted descending.
/// vectors[k] is the unit eigenvector for values[k]; its first entry that is
/// not negligible is positive.
struct Spectrum {
  Vector values;
  std::vector<Vector> vectors;

  std::size_t size() const { return values.size(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

namespace detail {

inline void orient(Vector& v) {
  for (double x : v) {
    if (std::abs(x) > 1e-12) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

}  // namespace detail

/// Cyclic Jacobi eigensolver. Rotations sweep the strict upper triangle row by
/// row, so the result is a deterministic function of the input.
inline Spectrum eigen_decompose(const SymmetricMatrix& m, int max_sweeps = kDefaultJacobiSweeps) {
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  std::vector<double> v(n * n, 0.0);
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i * n + i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j);
      frob += m(i, j) * m(i, j);
    }
  }
  auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto V = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };

  const double eps = std::numeric_limits<double>::epsilon();
  const double threshold = eps * eps * frob;
  bool converged = false;
  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    if (off <= threshold) {
      converged = true;
      break;
    }
    if (sweep == max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        A(p, p) -= t * apq;
        A(q, q) += t * apq;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = A(r, p);
            const double arq = A(r, q);
            A(r, p) = c * arp - s * arq;
            A(p, r) = A(r, p);
            A(r, q) = s * arp + c * arq;
            A(q, r) = A(r, q);
          }
          const double vrp = V(r, p);
          const double vrq = V(r, q);
          V(r, p) = c * vrp - s * vrq;
          V(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged) throw NotConvergedError("Jacobi eigensolver did not converge within the sweep cap");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return A(x, x) > A(y, y); });

  Spectrum out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(A(k, k));
    Vector col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = V(r, k);
    detail::orient(col);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

}  // namespace twodist
