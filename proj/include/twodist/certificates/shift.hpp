#pragma once

#include <algorithm>
#include <optional>

#include "twodist/graphs/graph.hpp"
#include "twodist/linalg/eigen.hpp"
#include "twodist/linalg/rational.hpp"
#include "twodist/linalg/scalar.hpp"
#include "twodist/linalg/symmetric.hpp"

namespace twodist {

/// Facts about M = shift*I + orientation*A_G, the matrix behind every
/// certificate: A + mu*I for alpha-graphs (orientation +1) and lambda*I - A
/// for beta-graphs (orientation -1).
struct ShiftAnalysis {
  Inertia inertia;
  bool j_in_range = false;
  std::optional<Scalar> quadform;  ///< j^T M^# j, present iff j is in the range
  double threshold = 0.0;          ///< tol' for float decisions, 0 in exact mode
  bool exact = false;
  bool ambiguous = false;          ///< some float decision fell in the grey band

  int rank() const { return inertia.rank(); }
  bool psd() const { return inertia.neg == 0; }
};

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

/// Float route from a precomputed adjacency spectrum.
inline ShiftAnalysis analyze_shift(const Graph& g, const Spectrum& adjacency_spectrum, double shift, int orientation,
                                   double tol) {
  Spectrum m;
  m.vectors = adjacency_spectrum.vectors;
  for (double a : adjacency_spectrum.values) m.values.push_back(shift + orientation * a);
  const double threshold = tol * std::max(1.0, std::abs(shift) + max_degree(g));
  const SpectralFactor f(std::move(m), threshold);
  const Vector j = ones(static_cast<std::size_t>(g.order()));

  ShiftAnalysis out;
  out.inertia = f.inertia();
  out.threshold = threshold;
  out.j_in_range = f.in_range(j);
  out.ambiguous = f.near_threshold() || f.range_decision_ambiguous(j);
  if (out.j_in_range) out.quadform = Scalar(f.quadform(j));
  return out;
}

inline ShiftAnalysis analyze_shift_exact(const Graph& g, const Rational& shift, int orientation) {
  RationalMatrix m = adjacency_matrix_exact(g) * Rational(orientation);
  m = m.shifted(shift);
  const ExactLdl ldl(m);
  const RationalVector j(static_cast<std::size_t>(g.order()), Rational(1));
  ShiftAnalysis out;
  out.exact = true;
  out.inertia = ldl.inertia();
  if (auto x = ldl.solve(j)) {
    out.j_in_range = true;
    Rational q = 0;
    for (const auto& xi : *x) q += xi;
    out.quadform = Scalar(q);
  }
  return out;
}

/// Dispatches on the shift: exact when it carries a rational value and
/// `exact` is requested.
inline ShiftAnalysis analyze_shift(const Graph& g, const Scalar& shift, int orientation, bool exact, double tol) {
  if (exact && shift.is_exact()) return analyze_shift_exact(g, *shift.exact(), orientation);
  return analyze_shift(g, eigen_decompose(adjacency_matrix(g)), shift.value(), orientation, tol);
}

}  // namespace twodist
