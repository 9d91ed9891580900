#pragma once

#include <optional>
#include <string>

#include "twodist/certificates/params.hpp"
#include "twodist/certificates/shift.hpp"
#include "twodist/errors.hpp"
#include "twodist/graphs/graph.hpp"
#include "twodist/linalg/eigen.hpp"

namespace twodist {

/// one/two/three: alpha > 0 route. p1/p2: alpha = 0 route.
enum class BetaCase { none, one, two, three, p1, p2 };

enum class BetaFailure { eigenvalue_above, negative_inertia, j_not_in_range, quadform_exceeds };

inline std::string to_string(BetaCase c) {
  switch (c) {
    case BetaCase::none: return "none";
    case BetaCase::one: return "one";
    case BetaCase::two: return "two";
    case BetaCase::three: return "three";
    case BetaCase::p1: return "p1";
    case BetaCase::p2: return "p2";
  }
  return "unknown";
}

inline std::string to_string(BetaFailure f) {
  switch (f) {
    case BetaFailure::eigenvalue_above: return "eigenvalue_above";
    case BetaFailure::negative_inertia: return "negative_inertia";
    case BetaFailure::j_not_in_range: return "j_not_in_range";
    case BetaFailure::quadform_exceeds: return "quadform_exceeds";
  }
  return "unknown";
}

/// Outcome of testing G as the beta-graph of a spherical {alpha,beta}-code,
/// via M = lambda*I - A with lambda = (1 - alpha) / (alpha - beta).
struct BetaCertificate {
  bool valid = false;
  BetaCase which = BetaCase::none;
  int rank_r = 0;
  std::optional<Scalar> quadform;  ///< case three only
  bool equality_case = false;
  double largest_eigenvalue = 0.0;
  std::optional<BetaFailure> failure_reason;
  bool exact = false;
  bool ambiguous = false;
};

namespace detail {

inline ShiftAnalysis beta_shift(const Graph& g, const Spectrum& spectrum, const CodeParameters& params, double tol,
                                Backend backend, bool& exact) {
  if (g.empty()) throw EmptySubsetError("cannot certify the graph of order 0");
  exact = params.use_exact(backend);
  return exact ? analyze_shift_exact(g, *params.lambda().exact(), -1)
               : analyze_shift(g, spectrum, params.lambda().value(), -1, tol);
}

}  // namespace detail

/// {0, beta}-codes, -1 <= beta < 0. With lambda = 1/(-beta):
/// p1 when lambda_1 < lambda (rank n); p2 when lambda_1 = lambda (rank of
/// lambda*I - A); invalid when lambda_1 > lambda.
inline BetaCertificate certify_beta_zero(const Graph& g, const Spectrum& adjacency_spectrum,
                                         const CodeParameters& params, double tol = kDefaultTolerance,
                                         Backend backend = Backend::automatic) {
  if (sign(params.alpha()) != 0 || sign(params.beta()) >= 0)
    throw ParameterDomainError("certify_beta_zero needs alpha = 0 and -1 <= beta < 0");
  BetaCertificate out;
  const ShiftAnalysis m = detail::beta_shift(g, adjacency_spectrum, params, tol, backend, out.exact);
  out.largest_eigenvalue = adjacency_spectrum.largest();
  out.ambiguous = m.ambiguous;
  out.rank_r = m.rank();
  if (m.inertia.neg > 0) {
    out.failure_reason = BetaFailure::eigenvalue_above;
    return out;
  }
  out.valid = true;
  out.which = m.inertia.zero == 0 ? BetaCase::p1 : BetaCase::p2;
  out.equality_case = out.which == BetaCase::p2;
  return out;
}

inline BetaCertificate certify_beta_zero(const Graph& g, const CodeParameters& params, double tol = kDefaultTolerance,
                                         Backend backend = Backend::automatic) {
  return certify_beta_zero(g, eigen_decompose(adjacency_matrix(g)), params, tol, backend);
}

inline BetaCertificate certify_beta_zero(const Graph& g, double beta, double tol = kDefaultTolerance) {
  return certify_beta_zero(g, CodeParameters::real(0.0, beta), tol, Backend::floating);
}

/// alpha > 0. Case one: lambda_1 < lambda, rank n. Case two: lambda_1 = lambda,
/// rank = rank(M) + 1. Case three: exactly one negative eigenvalue of M,
/// j in R(M) and q = j^T M^# j <= (alpha - beta)/(-alpha); rank(M) - 1 on
/// equality, rank(M) otherwise.
inline BetaCertificate certify_beta(const Graph& g, const Spectrum& adjacency_spectrum, const CodeParameters& params,
                                    double tol = kDefaultTolerance, Backend backend = Backend::automatic) {
  if (sign(params.alpha()) <= 0) throw ParameterDomainError("certify_beta needs alpha > 0 (use certify_beta_zero for alpha = 0)");
  BetaCertificate out;
  const ShiftAnalysis m = detail::beta_shift(g, adjacency_spectrum, params, tol, backend, out.exact);
  out.largest_eigenvalue = adjacency_spectrum.largest();
  out.ambiguous = m.ambiguous;
  out.rank_r = m.rank();
  if (m.inertia.neg == 0) {
    out.valid = true;
    if (m.inertia.zero == 0) {
      out.which = BetaCase::one;
      out.rank_r = g.order();
    } else {
      out.which = BetaCase::two;
      out.equality_case = true;
      out.rank_r = m.rank() + 1;
    }
    return out;
  }
  if (m.inertia.neg >= 2) {
    out.failure_reason = BetaFailure::negative_inertia;
    return out;
  }
  if (!m.j_in_range) {
    out.failure_reason = BetaFailure::j_not_in_range;
    return out;
  }
  out.quadform = m.quadform;
  const Scalar bound = (params.alpha() - params.beta()) / (-params.alpha());
  const Order order = compare(*m.quadform, bound, m.threshold);
  out.ambiguous = out.ambiguous || comparison_ambiguous(*m.quadform, bound, m.threshold);
  if (order == Order::greater) {
    out.failure_reason = BetaFailure::quadform_exceeds;
    return out;
  }
  out.valid = true;
  out.which = BetaCase::three;
  out.equality_case = order == Order::equal;
  out.rank_r = out.equality_case ? m.rank() - 1 : m.rank();
  return out;
}

inline BetaCertificate certify_beta(const Graph& g, const CodeParameters& params, double tol = kDefaultTolerance,
                                    Backend backend = Backend::automatic) {
  return certify_beta(g, eigen_decompose(adjacency_matrix(g)), params, tol, backend);
}

/// Routes alpha = 0 to certify_beta_zero and alpha > 0 to certify_beta.
inline BetaCertificate certify_beta_graph(const Graph& g, const CodeParameters& params, double tol = kDefaultTolerance,
                                          Backend backend = Backend::automatic) {
  if (sign(params.alpha()) == 0) return certify_beta_zero(g, params, tol, backend);
  return certify_beta(g, params, tol, backend);
}

}  // namespace twodist
