#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twodist/errors.hpp"
#include "twodist/linalg/eigen.hpp"
#include "twodist/linalg/matrix.hpp"

namespace twodist {

inline constexpr double kDefaultTolerance = 1e-9;

/// Quantities whose magnitude lies in (tol', kGreyBand * tol'] are neither
/// clearly zero nor clearly nonzero.
inline constexpr double kGreyBand = 10.0;

inline bool in_grey_band(double magnitude, double threshold) {
  return magnitude > threshold && magnitude <= kGreyBand * threshold;
}

struct Inertia {
  int pos = 0;
  int neg = 0;
  int zero = 0;

  int size() const { return pos + neg + zero; }
  int rank() const { return pos + neg; }
  bool operator==(const Inertia&) const = default;
};

inline std::string to_string(const Inertia& in) {
  return "(" + std::to_string(in.pos) + "," + std::to_string(in.neg) + "," + std::to_string(in.zero) + ")";
}

/// A symmetric matrix together with its spectrum and decision threshold.
/// All range/solve/quadratic-form questions about M are answered from the
/// eigenpairs, inverting only eigenvalues with |lambda| > tol'.
class SpectralFactor {
 public:
  SpectralFactor(const SymmetricMatrix& m, double tol)
      : spectrum_(eigen_decompose(m)), threshold_(scaled_tolerance(m, tol)) {}

  /// Reuses a precomputed spectrum; `threshold` is already scaled.
  SpectralFactor(Spectrum spectrum, double threshold) : spectrum_(std::move(spectrum)), threshold_(threshold) {}

  const Spectrum& spectrum() const { return spectrum_; }
  double threshold() const { return threshold_; }
  std::size_t size() const { return spectrum_.size(); }

  bool is_zero(double lambda) const { return std::abs(lambda) <= threshold_; }

  Inertia inertia() const {
    Inertia in;
    for (double l : spectrum_.values) {
      if (l > threshold_)
        ++in.pos;
      else if (l < -threshold_)
        ++in.neg;
      else
        ++in.zero;
    }
    return in;
  }

  int rank() const { return inertia().rank(); }

  /// True if some eigenvalue sits in the grey band around zero.
  bool near_threshold() const {
    for (double l : spectrum_.values)
      if (in_grey_band(std::abs(l), threshold_)) return true;
    return false;
  }

  /// Norm of the projection of v onto the numerical kernel.
  double kernel_component(std::span<const double> v) const {
    check(v);
    double sq = 0.0;
    for (std::size_t k = 0; k < size(); ++k) {
      if (!is_zero(spectrum_.values[k])) continue;
      const double c = dot(spectrum_.vectors[k], v);
      sq += c * c;
    }
    return std::sqrt(sq);
  }

  bool in_range(std::span<const double> v) const { return kernel_component(v) <= threshold_ * norm(v); }

  /// Grey-band test for the range-membership decision.
  bool range_decision_ambiguous(std::span<const double> v) const {
    return in_grey_band(kernel_component(v), threshold_ * norm(v));
  }

  /// Minimum-norm solution of M x = v.
  Vector solve(std::span<const double> v) const {
    if (!in_range(v)) throw NotInRangeError("vector is not in the range of the matrix");
    Vector x(size(), 0.0);
    for (std::size_t k = 0; k < size(); ++k) {
      const double l = spectrum_.values[k];
      if (is_zero(l)) continue;
      const auto& q = spectrum_.vectors[k];
      const double c = dot(q, v) / l;
      for (std::size_t i = 0; i < size(); ++i) x[i] += c * q[i];
    }
    return x;
  }

  /// v^T M^# v, computed as v^T x for the minimum-norm solution x.
  double quadform(std::span<const double> v) const {
    const Vector x = solve(v);
    return dot(v, x);
  }

  SymmetricMatrix group_inverse() const {
    SymmetricMatrix out(size());
    for (std::size_t k = 0; k < size(); ++k) {
      const double l = spectrum_.values[k];
      if (is_zero(l)) continue;
      const auto& q = spectrum_.vectors[k];
      for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i; j < size(); ++j) out.set(i, j, out(i, j) + q[i] * q[j] / l);
    }
    return out;
  }

 private:
  void check(std::span<const double> v) const {
    if (v.size() != size()) throw DimensionMismatchError("vector size does not match matrix order");
  }

  Spectrum spectrum_;
  double threshold_;
};

inline Inertia inertia(const SymmetricMatrix& m, double tol = kDefaultTolerance) {
  return SpectralFactor(m, tol).inertia();
}

inline int rank_sym(const SymmetricMatrix& m, double tol = kDefaultTolerance) { return SpectralFactor(m, tol).rank(); }

inline bool in_range(const SymmetricMatrix& m, std::span<const double> v, double tol = kDefaultTolerance) {
  return SpectralFactor(m, tol).in_range(v);
}

inline Vector solve_in_range(const SymmetricMatrix& m, std::span<const double> v, double tol = kDefaultTolerance) {
  return SpectralFactor(m, tol).solve(v);
}

inline double quadform_group_inverse(const SymmetricMatrix& m, std::span<const double> v,
                                     double tol = kDefaultTolerance) {
  return SpectralFactor(m, tol).quadform(v);
}

inline SymmetricMatrix group_inverse(const SymmetricMatrix& m, double tol = kDefaultTolerance) {
  return SpectralFactor(m, tol).group_inverse();
}

/// True iff M N M = M within tol'.
inline bool is_one_inverse(const SymmetricMatrix& m, const DenseMatrix& n, double tol = kDefaultTolerance) {
  if (n.size() != m.size()) throw DimensionMismatchError("candidate inverse has the wrong order");
  const DenseMatrix d = to_dense(m);
  return (d * n * d - d).max_abs() <= scaled_tolerance(m, tol);
}

/// {1}-inverse obtained by inverting a nonsingular principal block of maximal
/// rank and padding with zeros. Blocks are tried in lexicographic order of
/// their index sets.
inline DenseMatrix bordered_one_inverse(const SymmetricMatrix& m, double tol = kDefaultTolerance) {
  const std::size_t n = m.size();
  if (n > 20) throw SizeGuardError("bordered_one_inverse supports n <= 20");
  const double threshold = scaled_tolerance(m, tol);
  const int r = SpectralFactor(m, tol).rank();
  DenseMatrix out(n);
  if (r == 0) return out;

  std::vector<std::size_t> idx(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  while (true) {
    SymmetricMatrix block(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a; b < idx.size(); ++b) block.set(a, b, m(idx[a], idx[b]));
    SpectralFactor f(eigen_decompose(block), threshold);
    if (f.rank() == r) {
      const SymmetricMatrix inv = f.group_inverse();
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) out(idx[a], idx[b]) = inv(a, b);
      return out;
    }
    // next combination
    int pos = r - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - static_cast<std::size_t>(r - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
  }
  throw NotConvergedError("no nonsingular principal block of maximal rank found");
}

/// Outcome of a rank-one update M + c u u^T.
struct RankOneUpdate {
  Inertia base;       ///< inertia of M
  Inertia inertia;    ///< inertia of M + c u u^T, computed directly
  Inertia predicted;  ///< inertia predicted from `base` and the case label
  bool positive_c = false;
  int case_label = 0;  ///< 1: u outside R(M); 2: s > -1; 3: s < -1; 4: s = -1
  std::optional<double> s;  ///< c x^T u with M x = u, when u is in the range

  bool consistent() const { return inertia == predicted; }
};

/// Applies the case table for the inertia of M + c u u^T.
inline Inertia predict_rank_one_inertia(const Inertia& base, bool positive_c, int case_label) {
  Inertia out = base;
  if (!positive_c) {
    switch (case_label) {
      case 1: out.neg += 1; break;
      case 2: break;
      case 3: out.pos -= 1; out.neg += 1; break;
      case 4: out.pos -= 1; break;
      default: throw ParameterDomainError("case label must be 1..4");
    }
  } else {
    switch (case_label) {
      case 1: out.pos += 1; break;
      case 2: break;
      case 3: out.pos += 1; out.neg -= 1; break;
      case 4: out.neg -= 1; break;
      default: throw ParameterDomainError("case label must be 1..4");
    }
  }
  out.zero = base.size() - out.pos - out.neg;
  return out;
}

/// Float route. Throws AmbiguousCaseError when any of the decisions (range
/// membership, the sign of s+1, or a zero eigenvalue of either matrix) falls in
/// the grey band.
inline RankOneUpdate rank_one_update_inertia(const SymmetricMatrix& m, std::span<const double> u, double c,
                                             double tol = kDefaultTolerance) {
  if (c == 0.0) throw ParameterDomainError("rank-one update requires c != 0");
  const SpectralFactor base(m, tol);
  const SymmetricMatrix updated = m.rank_one_update(u, c);
  const SpectralFactor after(updated, tol);

  RankOneUpdate out;
  out.base = base.inertia();
  out.inertia = after.inertia();
  out.positive_c = c > 0.0;

  bool ambiguous = base.near_threshold() || after.near_threshold() || base.range_decision_ambiguous(u);
  if (!base.in_range(u)) {
    out.case_label = 1;
  } else {
    const double s = c * base.quadform(u);
    out.s = s;
    const double gap = std::abs(s + 1.0);
    ambiguous = ambiguous || in_grey_band(gap, base.threshold());
    if (gap <= base.threshold())
      out.case_label = 4;
    else
      out.case_label = s > -1.0 ? 2 : 3;
  }
  if (ambiguous) throw AmbiguousCaseError("rank-one update decision lies inside the tolerance grey band");
  out.predicted = predict_rank_one_inertia(out.base, out.positive_c, out.case_label);
  return out;
}

}  // namespace twodist
