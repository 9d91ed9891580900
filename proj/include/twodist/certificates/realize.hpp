#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "twodist/certificates/alpha.hpp"
#include "twodist/certificates/beta.hpp"
#include "twodist/certificates/code.hpp"
#include "twodist/certificates/params.hpp"
#include "twodist/errors.hpp"
#include "twodist/graphs/graph.hpp"
#include "twodist/linalg/eigen.hpp"

namespace twodist {

/// (alpha - beta)(A + mu*I) + beta*J, the Gram matrix of a code whose
/// alpha-graph is G.
inline SymmetricMatrix alpha_gram(const Graph& g, const CodeParameters& params) {
  const Scalar diff = params.alpha() - params.beta();
  const double diag = (diff * params.mu() + params.beta()).value();
  const double on = (diff + params.beta()).value();
  const double off = params.beta().value();
  SymmetricMatrix out(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) {
    out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), diag);
    for (int j = i + 1; j < g.order(); ++j)
      out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), g.adjacent(i, j) ? on : off);
  }
  return out;
}

/// (alpha - beta)(lambda*I - A) + alpha*J, the Gram matrix of a code whose
/// beta-graph is G. For alpha = 0 this is -beta*(lambda*I - A).
inline SymmetricMatrix beta_gram(const Graph& g, const CodeParameters& params) {
  const Scalar diff = params.alpha() - params.beta();
  const double diag = (diff * params.lambda() + params.alpha()).value();
  const double on = (params.alpha() - diff).value();
  const double off = params.alpha().value();
  SymmetricMatrix out(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) {
    out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), diag);
    for (int j = i + 1; j < g.order(); ++j)
      out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), g.adjacent(i, j) ? on : off);
  }
  return out;
}

/// Vectors v_i = (sqrt(l_k) q_k[i])_k over the `rank` largest eigenpairs of a
/// PSD Gram matrix, renormalized to unit length and padded to `dim`
/// coordinates when requested.
inline SphericalCode factor_gram(const SymmetricMatrix& gram, int rank, const CodeParameters& params,
                                 double tol = kDefaultTolerance, std::optional<int> dim = std::nullopt) {
  const Spectrum s = eigen_decompose(gram);
  const double threshold = scaled_tolerance(gram, tol);
  int kept = 0;
  for (double l : s.values)
    if (l > threshold) ++kept;
  if (kept != rank)
    throw ReconstructionResidualError("Gram matrix has " + std::to_string(kept) + " positive eigenvalues, expected " +
                                      std::to_string(rank));
  if (s.smallest() < -threshold) throw ReconstructionResidualError("Gram matrix is not positive semidefinite");
  const int out_dim = dim.value_or(rank);
  if (out_dim < rank) throw DimensionMismatchError("requested dimension is below the code rank");

  const std::size_t n = gram.size();
  SphericalCode code{out_dim, std::vector<Vector>(n, Vector(static_cast<std::size_t>(out_dim), 0.0)), params};
  for (std::size_t i = 0; i < n; ++i) {
    auto& v = code.vectors[i];
    for (int k = 0; k < rank; ++k)
      v[static_cast<std::size_t>(k)] = std::sqrt(s.values[static_cast<std::size_t>(k)]) * s.vectors[static_cast<std::size_t>(k)][i];
    const double len = norm(v);
    if (std::abs(len - 1.0) > threshold) throw ReconstructionResidualError("realized vector is not of unit length");
    for (double& x : v) x /= len;
  }
  const SymmetricMatrix back = gram_matrix(code.vectors);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) residual = std::max(residual, std::abs(back(i, j) - gram(i, j)));
  if (residual > 10.0 * threshold) throw ReconstructionResidualError("Gram reconstruction residual exceeds 10 tol'");
  return code;
}

/// Largest entrywise deviation between the code's Gram matrix and `gram`.
inline double gram_residual(const SphericalCode& code, const SymmetricMatrix& gram) {
  const SymmetricMatrix back = gram_matrix(code.vectors);
  double residual = 0.0;
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j) residual = std::max(residual, std::abs(back(i, j) - gram(i, j)));
  return residual;
}

inline SphericalCode realize_from_alpha(const Graph& g, const CodeParameters& params, double tol = kDefaultTolerance,
                                        Backend backend = Backend::automatic, std::optional<int> dim = std::nullopt) {
  const AlphaCertificate cert = certify_alpha(g, params, tol, backend);
  if (!cert.valid)
    throw CertificateInvalidError("graph is not an alpha-graph for " + params.describe() + ": " +
                                  to_string(*cert.failure_reason));
  const SymmetricMatrix gram = alpha_gram(g, params);
  SphericalCode code = factor_gram(gram, cert.rank_r, params, tol, dim);
  const double check_tol = 10.0 * scaled_tolerance(gram, tol);
  if (!verify_code(code, check_tol).valid || alpha_graph(code, check_tol) != g)
    throw ReconstructionResidualError("realized code does not reproduce the graph");
  return code;
}

inline SphericalCode realize_from_beta(const Graph& g, const CodeParameters& params, double tol = kDefaultTolerance,
                                       Backend backend = Backend::automatic, std::optional<int> dim = std::nullopt) {
  const BetaCertificate cert = certify_beta_graph(g, params, tol, backend);
  if (!cert.valid)
    throw CertificateInvalidError("graph is not a beta-graph for " + params.describe() + ": " +
                                  to_string(*cert.failure_reason));
  const SymmetricMatrix gram = beta_gram(g, params);
  SphericalCode code = factor_gram(gram, cert.rank_r, params, tol, dim);
  const double check_tol = 10.0 * scaled_tolerance(gram, tol);
  if (!verify_code(code, check_tol).valid || beta_graph(code, check_tol) != g)
    throw ReconstructionResidualError("realized code does not reproduce the graph");
  return code;
}

}  // namespace twodist
