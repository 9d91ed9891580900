#pragma once

#include <optional>
#include <string>

#include "twodist/certificates/params.hpp"
#include "twodist/certificates/shift.hpp"
#include "twodist/errors.hpp"
#include "twodist/graphs/graph.hpp"
#include "twodist/linalg/eigen.hpp"

namespace twodist {

enum class AlphaFailure { eigenvalue_below, j_not_in_range, quadform_exceeds };

inline std::string to_string(AlphaFailure f) {
  switch (f) {
    case AlphaFailure::eigenvalue_below: return "eigenvalue_below";
    case AlphaFailure::j_not_in_range: return "j_not_in_range";
    case AlphaFailure::quadform_exceeds: return "quadform_exceeds";
  }
  return "unknown";
}

/// Outcome of testing G as the alpha-graph of a spherical {alpha,beta}-code
/// (beta < 0). With M = A + mu*I and q = j^T M^# j the graph is realizable iff
/// M is PSD, j lies in R(M) and q <= p; the code then has rank
/// rank(M) - 1 when q = p and rank(M) otherwise.
struct AlphaCertificate {
  bool valid = false;
  int rank_r = 0;
  int shifted_rank = 0;  ///< rank(A + mu*I)
  std::optional<Scalar> quadform;
  bool equality_case = false;
  double smallest_eigenvalue = 0.0;
  std::optional<AlphaFailure> failure_reason;
  bool exact = false;
  bool ambiguous = false;

  double quadform_value() const { return quadform ? quadform->value() : 0.0; }
};

inline AlphaCertificate certify_alpha(const Graph& g, const Spectrum& adjacency_spectrum, const CodeParameters& params,
                                      double tol = kDefaultTolerance, Backend backend = Backend::automatic) {
  if (!params.has_p()) throw ParameterDomainError("alpha-graph certificates require beta < 0");
  if (g.empty()) throw EmptySubsetError("cannot certify the graph of order 0");
  const bool exact = params.use_exact(backend);
  const ShiftAnalysis m = exact ? analyze_shift_exact(g, *params.mu().exact(), +1)
                                : analyze_shift(g, adjacency_spectrum, params.mu().value(), +1, tol);
  AlphaCertificate out;
  out.exact = exact;
  out.smallest_eigenvalue = adjacency_spectrum.smallest();
  out.shifted_rank = m.rank();
  out.rank_r = m.rank();
  out.ambiguous = m.ambiguous;
  if (!m.psd()) {
    out.failure_reason = AlphaFailure::eigenvalue_below;
    return out;
  }
  if (!m.j_in_range) {
    out.failure_reason = AlphaFailure::j_not_in_range;
    return out;
  }
  out.quadform = m.quadform;
  const Order order = compare(*m.quadform, params.p(), m.threshold);
  out.ambiguous = out.ambiguous || comparison_ambiguous(*m.quadform, params.p(), m.threshold);
  if (order == Order::greater) {
    out.failure_reason = AlphaFailure::quadform_exceeds;
    return out;
  }
  out.equality_case = order == Order::equal;
  out.rank_r = out.equality_case ? m.rank() - 1 : m.rank();
  out.valid = true;
  return out;
}

inline AlphaCertificate certify_alpha(const Graph& g, const CodeParameters& params, double tol = kDefaultTolerance,
                                      Backend backend = Backend::automatic) {
  return certify_alpha(g, eigen_decompose(adjacency_matrix(g)), params, tol, backend);
}

}  // namespace twodist
