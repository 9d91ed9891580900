#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "twodist/linalg/rational.hpp"

namespace twodist {

/// A real number that may also carry an exact rational value. Arithmetic stays
/// exact while both operands are exact and degrades to double otherwise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(double v) : approx_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : approx_(v), exact_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : approx_(q.get_d()), exact_(q) {}  // NOLINT(google-explicit-constructor)

  double value() const { return approx_; }
  bool is_exact() const { return exact_.has_value(); }
  const std::optional<Rational>& exact() const { return exact_; }

  std::string str() const {
    if (exact_) return exact_->get_str();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", approx_);
    return buf;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(Rational(*a.exact_ + *b.exact_));
    return Scalar(a.approx_ + b.approx_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(Rational(*a.exact_ - *b.exact_));
    return Scalar(a.approx_ - b.approx_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(Rational(*a.exact_ * *b.exact_));
    return Scalar(a.approx_ * b.approx_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
      if (*b.exact_ == 0) throw ParameterDomainError("division by zero");
      return Scalar(Rational(*a.exact_ / *b.exact_));
    }
    return Scalar(a.approx_ / b.approx_);
  }
  friend Scalar operator-(const Scalar& a) {
    if (a.exact_) return Scalar(Rational(-*a.exact_));
    return Scalar(-a.approx_);
  }

 private:
  double approx_ = 0.0;
  std::optional<Rational> exact_;
};

enum class Order { less, equal, greater };

/// Three-way comparison. Exact when both sides are exact; otherwise values
/// within `threshold` of each other compare equal.
inline Order compare(const Scalar& a, const Scalar& b, double threshold) {
  if (a.is_exact() && b.is_exact()) {
    const int c = cmp(*a.exact(), *b.exact());
    return c < 0 ? Order::less : (c == 0 ? Order::equal : Order::greater);
  }
  const double diff = a.value() - b.value();
  if (std::abs(diff) <= threshold) return Order::equal;
  return diff < 0 ? Order::less : Order::greater;
}

/// True when a float comparison falls in the grey band; exact comparisons never do.
inline bool comparison_ambiguous(const Scalar& a, const Scalar& b, double threshold) {
  if (a.is_exact() && b.is_exact()) return false;
  return in_grey_band(std::abs(a.value() - b.value()), threshold);
}

inline bool leq(const Scalar& a, const Scalar& b, double threshold) { return compare(a, b, threshold) != Order::greater; }

}  // namespace twodist
