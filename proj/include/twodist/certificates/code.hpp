#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "twodist/certificates/params.hpp"
#include "twodist/errors.hpp"
#include "twodist/graphs/graph.hpp"
#include "twodist/linalg/matrix.hpp"
#include "twodist/linalg/symmetric.hpp"

namespace twodist {

/// Unit vectors in R^dim whose distinct pairs have inner product alpha or beta.
struct SphericalCode {
  int dim = 0;
  std::vector<Vector> vectors;
  CodeParameters params;

  int size() const { return static_cast<int>(vectors.size()); }
};

struct PairViolation {
  int i = 0;
  int j = 0;
  double inner = 0.0;
};

struct NormViolation {
  int i = 0;
  double norm = 0.0;
};

struct CodeVerification {
  bool valid = false;
  std::vector<NormViolation> norm_violations;
  std::vector<PairViolation> pair_violations;
  bool alpha_occurs = false;
  bool beta_occurs = false;
};

inline void check_dimensions(const std::vector<Vector>& vectors) {
  if (vectors.empty()) throw DimensionMismatchError("a code needs at least one vector");
  for (const auto& v : vectors)
    if (v.size() != vectors.front().size()) throw DimensionMismatchError("code vectors have different dimensions");
}

inline SymmetricMatrix gram_matrix(const std::vector<Vector>& vectors) {
  SymmetricMatrix g(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) g.set(i, j, dot(vectors[i], vectors[j]));
  return g;
}

/// Unit norms within tol and every distinct inner product within tol of alpha
/// or beta. Both values need not occur.
inline CodeVerification verify_code(const std::vector<Vector>& vectors, double alpha, double beta,
                                    double tol = kDefaultTolerance) {
  check_dimensions(vectors);
  CodeVerification out;
  const int n = static_cast<int>(vectors.size());
  for (int i = 0; i < n; ++i) {
    const double nv = norm(vectors[static_cast<std::size_t>(i)]);
    if (std::abs(nv - 1.0) > tol) out.norm_violations.push_back({i, nv});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double ip = dot(vectors[static_cast<std::size_t>(i)], vectors[static_cast<std::size_t>(j)]);
      const bool is_alpha = std::abs(ip - alpha) <= tol;
      const bool is_beta = std::abs(ip - beta) <= tol;
      out.alpha_occurs = out.alpha_occurs || is_alpha;
      out.beta_occurs = out.beta_occurs || is_beta;
      if (!is_alpha && !is_beta) out.pair_violations.push_back({i, j, ip});
    }
  out.valid = out.norm_violations.empty() && out.pair_violations.empty();
  return out;
}

inline CodeVerification verify_code(const SphericalCode& code, double tol = kDefaultTolerance) {
  return verify_code(code.vectors, code.params.alpha().value(), code.params.beta().value(), tol);
}

namespace detail {

inline Graph inner_product_graph(const SphericalCode& code, double target, double tol) {
  if (std::abs(code.params.alpha().value() - code.params.beta().value()) <= 2.0 * tol)
    throw AmbiguousPairError("alpha and beta are within twice the tolerance of each other");
  if (!verify_code(code, tol).valid) throw InvalidCodeError("vectors do not form a code with these parameters");
  Graph g(code.size());
  for (int i = 0; i < code.size(); ++i)
    for (int j = i + 1; j < code.size(); ++j)
      if (std::abs(dot(code.vectors[static_cast<std::size_t>(i)], code.vectors[static_cast<std::size_t>(j)]) - target) <= tol)
        g.add_edge(i, j);
  return g;
}

}  // namespace detail

/// Joins pairs with inner product alpha.
inline Graph alpha_graph(const SphericalCode& code, double tol = kDefaultTolerance) {
  return detail::inner_product_graph(code, code.params.alpha().value(), tol);
}

/// Joins pairs with inner product beta; the complement of alpha_graph.
inline Graph beta_graph(const SphericalCode& code, double tol = kDefaultTolerance) {
  return detail::inner_product_graph(code, code.params.beta().value(), tol);
}

/// Dimension of the span of the code: rank of its Gram matrix.
inline int code_rank(const SphericalCode& code, double tol = kDefaultTolerance) {
  check_dimensions(code.vectors);
  return rank_sym(gram_matrix(code.vectors), tol);
}

}  // namespace twodist
