#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "twodist/errors.hpp"
#include "twodist/linalg/scalar.hpp"

namespace twodist {

/// Selects the arithmetic used by certificates.
/// automatic: exact when the parameters are rational, float otherwise.
enum class Backend { automatic, floating, exact };

inline int sign(const Scalar& s) {
  if (s.is_exact()) return sgn(*s.exact());
  return s.value() > 0 ? 1 : (s.value() < 0 ? -1 : 0);
}

/// The inner-product pair (alpha, beta) of a spherical two-distance code and
/// the derived quantities
///   mu     = (1 - beta) / (alpha - beta)
///   lambda = (1 - alpha) / (alpha - beta)
///   p      = (alpha - beta) / (-beta)        (only when beta < 0)
class CodeParameters {
 public:
  CodeParameters(Scalar alpha, Scalar beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.is_exact() != beta_.is_exact()) {
      alpha_ = Scalar(alpha_.value());
      beta_ = Scalar(beta_.value());
    }
    if (sign(beta_ - Scalar(-1)) < 0) throw ParameterDomainError("beta must be at least -1");
    if (sign(alpha_ - beta_) <= 0) throw ParameterDomainError("beta must be smaller than alpha");
    if (sign(Scalar(1) - alpha_) <= 0) throw ParameterDomainError("alpha must be smaller than 1");
    mu_ = (Scalar(1) - beta_) / (alpha_ - beta_);
    lambda_ = (Scalar(1) - alpha_) / (alpha_ - beta_);
    if (sign(beta_) < 0) p_ = (alpha_ - beta_) / (-beta_);
  }

  static CodeParameters real(double alpha, double beta) { return {Scalar(alpha), Scalar(beta)}; }
  static CodeParameters exact(const Rational& alpha, const Rational& beta) { return {Scalar(alpha), Scalar(beta)}; }

  /// Inner products of the regular pentagon: cos(2pi/5), cos(4pi/5).
  static CodeParameters pentagon() {
    return real(std::cos(2.0 * std::numbers::pi / 5.0), std::cos(4.0 * std::numbers::pi / 5.0));
  }

  const Scalar& alpha() const { return alpha_; }
  const Scalar& beta() const { return beta_; }
  const Scalar& mu() const { return mu_; }
  const Scalar& lambda() const { return lambda_; }

  /// (alpha - beta) / (-beta); throws when beta >= 0.
  const Scalar& p() const {
    if (!p_) throw ParameterDomainError("p is defined only for beta < 0");
    return *p_;
  }
  bool has_p() const { return p_.has_value(); }

  bool is_exact() const { return alpha_.is_exact(); }

  /// Uses exact arithmetic under this backend choice?
  bool use_exact(Backend backend) const {
    if (backend == Backend::exact && !is_exact()) throw ParameterDomainError("exact backend requested for irrational parameters");
    return backend == Backend::exact || (backend == Backend::automatic && is_exact());
  }

  /// Same parameters with the exact representation dropped.
  CodeParameters as_float() const { return real(alpha_.value(), beta_.value()); }

  std::string describe() const { return "alpha=" + alpha_.str() + " beta=" + beta_.str(); }

 private:
  Scalar alpha_;
  Scalar beta_;
  Scalar mu_;
  Scalar lambda_;
  std::optional<Scalar> p_;
};

}  // namespace twodist
