#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "twodist/errors.hpp"

namespace twodist {

using Vector = std::vector<double>;

/// Dense row-major square matrix. Used where a result need not be symmetric
/// (for example a {1}-inverse).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  DenseMatrix operator*(const DenseMatrix& rhs) const {
    check_same(rhs);
    DenseMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const double a = (*this)(i, k);
        if (a == 0.0) continue;
        for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  DenseMatrix operator+(const DenseMatrix& rhs) const {
    check_same(rhs);
    DenseMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
  }

  DenseMatrix operator-(const DenseMatrix& rhs) const {
    check_same(rhs);
    DenseMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
  }

  Vector operator*(std::span<const double> v) const {
    if (v.size() != n_) throw DimensionMismatchError("matrix-vector size mismatch");
    Vector out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
  }

 private:
  void check_same(const DenseMatrix& rhs) const {
    if (rhs.n_ != n_) throw DimensionMismatchError("matrix size mismatch");
  }

  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Symmetric n-by-n matrix over a field T. Every write keeps (i,j) and (j,i) equal.
template <class T>
class SymmetricMatrixT {
 public:
  using value_type = T;

  SymmetricMatrixT() = default;
  explicit SymmetricMatrixT(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  static SymmetricMatrixT identity(std::size_t n) {
    SymmetricMatrixT m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, T(1));
    return m;
  }

  static SymmetricMatrixT all_ones(std::size_t n) {
    SymmetricMatrixT m(n);
    for (auto& x : m.data_) x = T(1);
    return m;
  }

  static SymmetricMatrixT diagonal(const std::vector<T>& d) {
    SymmetricMatrixT m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
  }

  /// Builds from explicit rows; throws if the rows are not square and symmetric.
  static SymmetricMatrixT from_rows(const std::vector<std::vector<T>>& rows) {
    SymmetricMatrixT m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw DimensionMismatchError("rows do not form a square matrix");
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (!(rows[i][j] == rows[j][i])) throw DimensionMismatchError("matrix is not symmetric");
        m.data_[i * m.n_ + j] = rows[i][j];
      }
    }
    return m;
  }

  std::size_t size() const { return n_; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, const T& v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  SymmetricMatrixT operator+(const SymmetricMatrixT& rhs) const {
    check_same(rhs);
    SymmetricMatrixT out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
  }

  SymmetricMatrixT operator-(const SymmetricMatrixT& rhs) const {
    check_same(rhs);
    SymmetricMatrixT out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
  }

  SymmetricMatrixT operator*(const T& s) const {
    SymmetricMatrixT out(*this);
    for (auto& x : out.data_) x *= s;
    return out;
  }

  /// M + s*I
  SymmetricMatrixT shifted(const T& s) const {
    SymmetricMatrixT out(*this);
    for (std::size_t i = 0; i < n_; ++i) out.data_[i * n_ + i] += s;
    return out;
  }

  /// M + c*u*u^T
  SymmetricMatrixT rank_one_update(std::span<const T> u, const T& c) const {
    if (u.size() != n_) throw DimensionMismatchError("update vector size mismatch");
    SymmetricMatrixT out(*this);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out.data_[i * n_ + j] += c * u[i] * u[j];
    return out;
  }

  std::vector<T> operator*(std::span<const T> v) const {
    if (v.size() != n_) throw DimensionMismatchError("matrix-vector size mismatch");
    std::vector<T> out(n_, T(0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += data_[i * n_ + j] * v[j];
    return out;
  }

  bool operator==(const SymmetricMatrixT& rhs) const { return n_ == rhs.n_ && data_ == rhs.data_; }

 private:
  void check_same(const SymmetricMatrixT& rhs) const {
    if (rhs.n_ != n_) throw DimensionMismatchError("matrix size mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using SymmetricMatrix = SymmetricMatrixT<double>;

/// Maximum absolute row sum.
inline double inf_norm(const SymmetricMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

/// The zero/sign threshold used for decisions about M: tol * max(1, ||M||_inf).
inline double scaled_tolerance(const SymmetricMatrix& m, double tol) { return tol * std::max(1.0, inf_norm(m)); }

inline DenseMatrix to_dense(const SymmetricMatrix& m) {
  DenseMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j);
  return out;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatchError("dot product size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline Vector ones(std::size_t n) { return Vector(n, 1.0); }

}  // namespace twodist
