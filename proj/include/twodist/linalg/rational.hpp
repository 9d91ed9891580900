#pragma once

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twodist/errors.hpp"
#include "twodist/linalg/matrix.hpp"
#include "twodist/linalg/symmetric.hpp"

namespace twodist {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = SymmetricMatrixT<Rational>;

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline long long floor_to_integer(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out.get_si();
}

/// Parses "a/b", an integer, or a decimal such as "-0.05" or "2.5e-3" into an
/// exact rational. Decimals are converted digit for digit, never via double.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational { throw ParameterDomainError("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) return fail();

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_rational(text.substr(0, slash));
    const auto den = parse_rational(text.substr(slash + 1));
    if (num.get_den() != 1 || den.get_den() != 1 || den == 0) return fail();
    Rational out(num.get_num(), den.get_num());
    out.canonicalize();
    return out;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return fail();
  long long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return fail();
    ++i;
    const std::string exp_text(text.substr(i));
    if (exp_text.empty()) return fail();
    std::size_t used = 0;
    try {
      exponent = std::stoll(exp_text, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != exp_text.size() || exponent > 1000 || exponent < -1000) return fail();
  }
  mpz_class num(digits, 10);
  const long long shift = exponent - scale;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
  Rational out = shift >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

inline SymmetricMatrix to_double(const RationalMatrix& m) {
  SymmetricMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) out.set(i, j, m(i, j).get_d());
  return out;
}

inline Vector to_double(std::span<const Rational> v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

/// Exact symmetric LDL^T with diagonal pivoting and 2x2 pivot blocks for the
/// indefinite case. Pivots are taken in index order; the first nonzero
/// diagonal entry wins, otherwise the first nonzero off-diagonal pair.
/// Factorization stops once the remaining Schur complement is identically zero.
class ExactLdl {
 public:
  explicit ExactLdl(const RationalMatrix& m) : n_(m.size()) { factor(m); }

  Inertia inertia() const { return inertia_; }
  int rank() const { return inertia_.rank(); }
  bool psd() const { return two_by_two_ == 0 && inertia_.neg == 0; }

  /// 1x1 pivots in elimination order.
  const std::vector<Rational>& pivots() const { return pivots_; }
  int two_by_two_blocks() const { return two_by_two_; }

  bool in_range(std::span<const Rational> v) const { return solve(v).has_value(); }

  /// Some exact solution of M x = v, or nullopt if v is outside the range.
  std::optional<RationalVector> solve(std::span<const Rational> v) const {
    if (v.size() != n_) throw DimensionMismatchError("vector size does not match matrix order");
    RationalVector w(v.begin(), v.end());
    for (const auto& s : steps_) {
      for (std::size_t r = 0; r < s.rest.size(); ++r) {
        Rational delta = s.mult[r][0] * w[s.pivot[0]];
        if (s.width == 2) delta += s.mult[r][1] * w[s.pivot[1]];
        w[s.rest[r]] -= delta;
      }
    }
    for (std::size_t j : zero_block_)
      if (w[j] != 0) return std::nullopt;

    RationalVector x(n_, Rational(0));
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
      const auto& s = *it;
      if (s.width == 1) {
        Rational xi = w[s.pivot[0]] / s.block[0];
        for (std::size_t r = 0; r < s.rest.size(); ++r) xi -= s.mult[r][0] * x[s.rest[r]];
        x[s.pivot[0]] = xi;
      } else {
        // z = B^{-1} w restricted to the pair, then subtract the L^T coupling.
        const Rational& a = s.block[0];
        const Rational& b = s.block[1];
        const Rational& c = s.block[2];
        const Rational det = a * c - b * b;
        Rational z0 = (c * w[s.pivot[0]] - b * w[s.pivot[1]]) / det;
        Rational z1 = (a * w[s.pivot[1]] - b * w[s.pivot[0]]) / det;
        for (std::size_t r = 0; r < s.rest.size(); ++r) {
          z0 -= s.mult[r][0] * x[s.rest[r]];
          z1 -= s.mult[r][1] * x[s.rest[r]];
        }
        x[s.pivot[0]] = z0;
        x[s.pivot[1]] = z1;
      }
    }
    return x;
  }

  /// v^T x for any solution of M x = v; independent of the solution chosen.
  Rational quadform(std::span<const Rational> v) const {
    const auto x = solve(v);
    if (!x) throw NotInRangeError("vector is not in the range of the matrix");
    Rational q = 0;
    for (std::size_t i = 0; i < n_; ++i) q += v[i] * (*x)[i];
    return q;
  }

 private:
  struct Step {
    int width = 1;
    std::array<std::size_t, 2> pivot{};
    std::array<Rational, 3> block;  // (a) for 1x1; (a, b, c) of [[a,b],[b,c]] for 2x2
    std::vector<std::size_t> rest;
    std::vector<std::array<Rational, 2>> mult;
  };

  void factor(const RationalMatrix& m) {
    std::vector<Rational> s(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) s[i * n_ + j] = m(i, j);
    auto S = [&](std::size_t i, std::size_t j) -> Rational& { return s[i * n_ + j]; };

    std::vector<std::size_t> active(n_);
    for (std::size_t i = 0; i < n_; ++i) active[i] = i;

    while (!active.empty()) {
      std::optional<std::size_t> diag;
      for (std::size_t i : active)
        if (S(i, i) != 0) {
          diag = i;
          break;
        }
      Step step;
      if (diag) {
        const std::size_t p = *diag;
        step.width = 1;
        step.pivot = {p, p};
        step.block[0] = S(p, p);
        for (std::size_t j : active)
          if (j != p) step.rest.push_back(j);
        for (std::size_t j : step.rest) step.mult.push_back({S(j, p) / S(p, p), Rational(0)});
        for (std::size_t r = 0; r < step.rest.size(); ++r)
          for (std::size_t t = 0; t < step.rest.size(); ++t)
            S(step.rest[r], step.rest[t]) -= step.mult[r][0] * S(p, step.rest[t]);
        pivots_.push_back(step.block[0]);
        if (step.block[0] > 0)
          ++inertia_.pos;
        else
          ++inertia_.neg;
      } else {
        std::optional<std::array<std::size_t, 2>> pair;
        for (std::size_t a = 0; a < active.size() && !pair; ++a)
          for (std::size_t b = a + 1; b < active.size(); ++b)
            if (S(active[a], active[b]) != 0) {
              pair = std::array<std::size_t, 2>{active[a], active[b]};
              break;
            }
        if (!pair) break;
        const auto [p, q] = *pair;
        step.width = 2;
        step.pivot = {p, q};
        const Rational a = S(p, p), b = S(p, q), c = S(q, q);
        step.block = {a, b, c};
        const Rational det = a * c - b * b;
        for (std::size_t j : active)
          if (j != p && j != q) step.rest.push_back(j);
        for (std::size_t j : step.rest) {
          const Rational& cp = S(j, p);
          const Rational& cq = S(j, q);
          step.mult.push_back({(cp * c - cq * b) / det, (cq * a - cp * b) / det});
        }
        for (std::size_t r = 0; r < step.rest.size(); ++r)
          for (std::size_t t = 0; t < step.rest.size(); ++t) {
            const std::size_t j = step.rest[r], l = step.rest[t];
            S(j, l) -= step.mult[r][0] * S(p, l) + step.mult[r][1] * S(q, l);
          }
        ++two_by_two_;
        if (det < 0) {
          ++inertia_.pos;
          ++inertia_.neg;
        } else if (a + c > 0) {
          inertia_.pos += 2;
        } else {
          inertia_.neg += 2;
        }
      }
      std::vector<std::size_t> next;
      for (std::size_t j : active)
        if (j != step.pivot[0] && j != step.pivot[1]) next.push_back(j);
      active = std::move(next);
      steps_.push_back(std::move(step));
    }
    zero_block_ = active;
    inertia_.zero = static_cast<int>(active.size());
  }

  std::size_t n_;
  Inertia inertia_;
  int two_by_two_ = 0;
  std::vector<Rational> pivots_;
  std::vector<Step> steps_;
  std::vector<std::size_t> zero_block_;
};

inline ExactLdl ldl_rational(const RationalMatrix& m) { return ExactLdl(m); }

/// Exact route of the rank-one inertia update; never ambiguous.
inline RankOneUpdate rank_one_update_inertia(const RationalMatrix& m, std::span<const Rational> u, const Rational& c) {
  if (c == 0) throw ParameterDomainError("rank-one update requires c != 0");
  const ExactLdl base(m);
  const ExactLdl after(m.rank_one_update(u, c));
  RankOneUpdate out;
  out.base = base.inertia();
  out.inertia = after.inertia();
  out.positive_c = c > 0;
  if (!base.in_range(u)) {
    out.case_label = 1;
  } else {
    const Rational s = c * base.quadform(u);
    out.s = s.get_d();
    if (s == -1)
      out.case_label = 4;
    else
      out.case_label = s > -1 ? 2 : 3;
  }
  out.predicted = predict_rank_one_inertia(out.base, out.positive_c, out.case_label);
  return out;
}

}  // namespace twodist
