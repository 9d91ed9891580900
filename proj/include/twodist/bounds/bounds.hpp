#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "twodist/certificates/alpha.hpp"
#include "twodist/certificates/params.hpp"
#include "twodist/certificates/shift.hpp"
#include "twodist/errors.hpp"
#include "twodist/graphs/algorithms.hpp"
#include "twodist/graphs/enumerate.hpp"
#include "twodist/graphs/graph.hpp"
#include "twodist/graphs/graph6.hpp"
#include "twodist/linalg/scalar.hpp"

namespace twodist {

enum class BoundName { dgs, subgraph, independence, clique_free, neighborhood, sandwich, recursion, turan, power };

inline std::string to_string(BoundName b) {
  switch (b) {
    case BoundName::dgs: return "dgs";
    case BoundName::subgraph: return "subgraph";
    case BoundName::independence: return "independence";
    case BoundName::clique_free: return "clique_free";
    case BoundName::neighborhood: return "neighborhood";
    case BoundName::sandwich: return "sandwich";
    case BoundName::recursion: return "recursion";
    case BoundName::turan: return "turan";
    case BoundName::power: return "power";
  }
  return "unknown";
}

/// One inequality lhs <= rhs inside a check.
struct BoundTerm {
  std::string label;
  Scalar lhs;
  Scalar rhs;
  bool holds = false;
  bool tight = false;  ///< lhs == rhs (exactly, or within the threshold)
};

/// `value` is the numeric bound, `integer_value` its floor. `holds` is set
/// only when a concrete graph was checked. Gate failures leave
/// applicable = false with the reason in `note`.
struct BoundReport {
  BoundName name = BoundName::dgs;
  double value = 0.0;
  long long integer_value = 0;
  std::optional<Rational> exact_value;  ///< set when `value` was computed exactly
  bool applicable = true;
  std::optional<bool> holds;
  std::string witness;
  std::string note;
  std::vector<BoundTerm> terms;
};

namespace detail {


inline double relative_threshold(const Scalar& a, const Scalar& b, double tol) {
  return tol * std::max({1.0, std::abs(a.value()), std::abs(b.value())});
}

inline BoundTerm make_term(std::string label, const Scalar& lhs, const Scalar& rhs, double tol) {
  const Order o = compare(lhs, rhs, relative_threshold(lhs, rhs, tol));
  return {std::move(label), lhs, rhs, o != Order::greater, o == Order::equal};
}

/// a < b with tolerance: values within the threshold do not count as less.
inline bool strictly_less(const Scalar& a, const Scalar& b, double tol) {
  return compare(a, b, relative_threshold(a, b, tol)) == Order::less;
}

inline long long floor_of(double v, double tol) { return static_cast<long long>(std::floor(v + tol * std::max(1.0, std::abs(v)))); }

inline void set_value(BoundReport& r, const Scalar& v, double tol) {
  r.value = v.value();
  r.exact_value = v.exact();
  r.integer_value = v.is_exact() ? floor_to_integer(*v.exact()) : floor_of(r.value, tol);
}

inline void finish(BoundReport& r) {
  bool all = true;
  for (const auto& t : r.terms) all = all && t.holds;
  r.holds = all;
}

inline void require_valid(const AlphaCertificate& cert) {
  if (!cert.valid) throw CertificateInvalidError("bound needs a valid alpha-certificate");
}

}  // namespace detail

/// d(d+3)/2.
inline int dgs_bound(int d) {
  if (d < 1) throw ParameterDomainError("dgs_bound needs d >= 1");
  return d * (d + 3) / 2;
}

/// t^2 <= (2|E(H)| + t*mu) q <= p (2|E(H)| + t*mu) for the induced subgraph H
/// on `h_vertices`, where q is the certificate quadform of G.
inline BoundReport check_subgraph_inequality(const Graph& g, const AlphaCertificate& cert, const VertexSet& h_vertices,
                                             const CodeParameters& params, double tol = kDefaultTolerance) {
  detail::require_valid(cert);
  const Graph h = induced(g, h_vertices);
  const int t = h.order();
  const Scalar s = Scalar(2 * h.edge_count()) + Scalar(t) * params.mu();
  const Scalar mid = s * *cert.quadform;
  BoundReport r;
  r.name = BoundName::subgraph;
  detail::set_value(r, mid, tol);
  r.witness = emit_graph6(h);
  r.terms.push_back(detail::make_term("t^2 <= (2e+t*mu)q", Scalar(t * t), mid, tol));
  r.terms.push_back(detail::make_term("(2e+t*mu)q <= p(2e+t*mu)", mid, params.p() * s, tol));
  detail::finish(r);
  return r;
}

inline BoundReport check_subgraph_inequality(const Graph& g, const VertexSet& h_vertices, const CodeParameters& params,
                                             double tol = kDefaultTolerance, Backend backend = Backend::automatic) {
  return check_subgraph_inequality(g, certify_alpha(g, params, tol, backend), h_vertices, params, tol);
}

/// independence number t <= mu*q <= (1 - beta)/(-beta).
inline BoundReport check_independence_bound(const Graph& g, const AlphaCertificate& cert, const CodeParameters& params,
                                            double tol = kDefaultTolerance) {
  detail::require_valid(cert);
  const int t = independence_number(g);
  const Scalar mid = params.mu() * *cert.quadform;
  BoundReport r;
  r.name = BoundName::independence;
  detail::set_value(r, mid, tol);
  r.witness = "alpha(G)=" + std::to_string(t);
  r.terms.push_back(detail::make_term("t <= mu*q", Scalar(t), mid, tol));
  r.terms.push_back(detail::make_term("mu*q <= (1-beta)/(-beta)", mid, (Scalar(1) - params.beta()) / (-params.beta()), tol));
  detail::finish(r);
  return r;
}

inline BoundReport check_independence_bound(const Graph& g, const CodeParameters& params, double tol = kDefaultTolerance,
                                            Backend backend = Backend::automatic) {
  return check_independence_bound(g, certify_alpha(g, params, tol, backend), params, tol);
}

/// G = K_{r+1} or G has no K_{r+1}.
inline BoundReport check_clique_free(const Graph& g, int rank_r) {
  if (rank_r < 0) throw ParameterDomainError("rank must be non-negative");
  BoundReport r;
  r.name = BoundName::clique_free;
  r.value = rank_r + 1;
  r.integer_value = rank_r + 1;
  const bool is_complete = g.order() == rank_r + 1 && g.edge_count() == g.order() * (g.order() - 1) / 2;
  const bool has_clique = contains_clique(g, rank_r + 1);
  r.holds = is_complete || !has_clique;
  r.witness = is_complete ? "G is K_{r+1}" : (has_clique ? "contains K_{r+1}" : "K_{r+1}-free");
  return r;
}

/// The four neighbourhood inequalities at vertex u:
///   q(G_u) <= (alpha - beta)/(alpha^2 - beta),          rank(G_u) <= rank(G) - 1,
///   q(G - N[u]) <= (alpha - beta)/(-beta(1 - beta)),    rank(G - N[u]) <= rank(G) - 1,
/// with q and rank taken for A_H + mu*I. Clauses on an empty subgraph are skipped.
inline BoundReport check_neighborhood_bounds(const Graph& g, const AlphaCertificate& cert, int u,
                                             const CodeParameters& params, double tol = kDefaultTolerance) {
  detail::require_valid(cert);
  if (u < 0 || u >= g.order()) throw ParameterDomainError("vertex out of range");
  const Scalar a = params.alpha();
  const Scalar b = params.beta();
  const Scalar diff = a - b;
  const int rank_g = cert.shifted_rank;
  BoundReport r;
  r.name = BoundName::neighborhood;
  r.witness = "u=" + std::to_string(u);

  auto clause = [&](const Graph& h, const std::string& tag, const Scalar& bound) {
    const ShiftAnalysis m = analyze_shift(h, params.mu(), +1, cert.exact, tol);
    if (m.quadform) {
      r.terms.push_back(detail::make_term("q(" + tag + ") <= bound", *m.quadform, bound, tol));
    } else {
      r.terms.push_back({"q(" + tag + ") <= bound", Scalar(), bound, false, false});
      r.note += tag + ": j not in range; ";
    }
    r.terms.push_back(detail::make_term("rank(" + tag + ") <= rank(G)-1", Scalar(m.rank()), Scalar(rank_g - 1), tol));
  };

  const VertexSet nbrs = open_neighborhood(g, u);
  if (nbrs.empty()) {
    r.note += "G_u empty: skipped; ";
  } else {
    clause(induced(g, nbrs), "G_u", diff / (a * a - b));
  }
  const Graph rest = induced_mask(g, g.vertex_mask() & ~(g.neighbors(u) | (std::uint64_t{1} << u)));
  if (rest.empty()) {
    r.note += "G-N[u] empty: skipped; ";
  } else {
    clause(rest, "G-N[u]", diff / (-b * (Scalar(1) - b)));
  }
  detail::set_value(r, r.terms.empty() ? Scalar(0) : r.terms.front().lhs, tol);
  detail::finish(r);
  return r;
}

inline BoundReport check_neighborhood_bounds(const Graph& g, int u, const CodeParameters& params,
                                             double tol = kDefaultTolerance, Backend backend = Backend::automatic) {
  return check_neighborhood_bounds(g, certify_alpha(g, params, tol, backend), u, params, tol);
}

struct SandwichResult {
  long long lower = 0;
  double upper = 0.0;
  std::vector<std::string> lower_witnesses;  ///< graph6 of the arg-max members
  std::vector<std::string> upper_witnesses;
  int members_used = 0;
  bool holds = false;  ///< lower <= upper
  std::string note;
};

/// Filters `family` to connected graphs with A + mu*I PSD, j in its range and
/// rank <= d + 1, then returns
///   lower = max over G != K_{d+1} of floor((d+1)/rank)*|V| + (d+1) mod rank,
///   upper = (d+1) * max |V|/rank.
inline SandwichResult sandwich_bounds(const Scalar& mu, int d, const GraphFamily& family, double tol = kDefaultTolerance,
                                      bool exact = true) {
  if (d < 1) throw ParameterDomainError("sandwich_bounds needs d >= 1");
  const int cap = d + 1;
  SandwichResult out;
  bool have_lower = false;
  for (const Graph& g : family.members) {
    if (g.empty() || !is_connected(g)) continue;
    const ShiftAnalysis m = analyze_shift(g, mu, +1, exact && mu.is_exact(), tol);
    if (!m.psd() || !m.j_in_range || m.rank() > cap || m.rank() == 0) continue;
    ++out.members_used;
    const int rank = m.rank();
    const std::string code = emit_graph6(g);
    const bool complete = g.order() == cap && g.edge_count() == cap * (cap - 1) / 2;
    if (!complete) {
      const long long lower = static_cast<long long>(cap / rank) * g.order() + cap % rank;
      if (!have_lower || lower > out.lower) {
        out.lower = lower;
        out.lower_witnesses.clear();
      }
      if (!have_lower || lower == out.lower) out.lower_witnesses.push_back(code);
      have_lower = true;
    }
    const double upper = static_cast<double>(cap) * g.order() / rank;
    if (out.upper_witnesses.empty() || upper > out.upper + tol) {
      out.upper = upper;
      out.upper_witnesses.assign(1, code);
    } else if (std::abs(upper - out.upper) <= tol) {
      out.upper_witnesses.push_back(code);
    }
  }
  if (out.members_used == 0) throw EmptySubsetError("no family member passes the sandwich filter");
  if (!have_lower) out.note = "only K_{d+1} passed the filter; lower bound not defined";
  out.holds = !have_lower || static_cast<double>(out.lower) <= out.upper + tol * std::max(1.0, out.upper);
  return out;
}

struct RecursionMap {
  Scalar alpha0;
  Scalar beta0;
  BoundTerm p_identity;   ///< (alpha0 - beta0)/(-beta0) = (alpha - beta)/(alpha^2 - beta)
  BoundTerm mu_identity;  ///< (1 - beta0)/(alpha0 - beta0) = (1 - beta)/(alpha - beta)
  bool holds = false;
};

/// alpha0 = alpha/(1 + alpha), beta0 = (beta - alpha^2)/(1 - alpha^2).
inline RecursionMap recursion_map(const Scalar& alpha, const Scalar& beta, double tol = kDefaultTolerance) {
  if (sign(beta) >= 0 || sign(alpha - beta) <= 0 || sign(Scalar(1) - alpha) <= 0 || sign(alpha + Scalar(1)) == 0)
    throw ParameterDomainError("recursion_map needs beta < 0, beta < alpha < 1 and alpha != -1");
  RecursionMap out;
  out.alpha0 = alpha / (Scalar(1) + alpha);
  out.beta0 = (beta - alpha * alpha) / (Scalar(1) - alpha * alpha);
  auto same = [tol](std::string label, const Scalar& x, const Scalar& y) {
    BoundTerm t = detail::make_term(std::move(label), x, y, tol);
    t.holds = t.tight;
    return t;
  };
  out.p_identity = same("(a0-b0)/(-b0) = (a-b)/(a^2-b)", (out.alpha0 - out.beta0) / (-out.beta0),
                        (alpha - beta) / (alpha * alpha - beta));
  out.mu_identity = same("(1-b0)/(a0-b0) = (1-b)/(a-b)", (Scalar(1) - out.beta0) / (out.alpha0 - out.beta0),
                         (Scalar(1) - beta) / (alpha - beta));
  out.holds = out.p_identity.holds && out.mu_identity.holds;
  return out;
}

/// p * (f + mu).
inline BoundReport recursion_bound(const CodeParameters& params, long long f_value, double tol = kDefaultTolerance) {
  if (!params.has_p()) throw ParameterDomainError("recursion_bound needs beta < 0");
  if (f_value < 0) throw ParameterDomainError("f must be non-negative");
  BoundReport r;
  r.name = BoundName::recursion;
  const Scalar v = params.p() * (Scalar(static_cast<int>(f_value)) + params.mu());
  detail::set_value(r, v, tol);
  r.witness = "f=" + std::to_string(f_value);
  return r;
}

/// max{d + 1, mu / ((-alpha)/(alpha - beta) + 1/d)}, applicable when
/// p < 1 + 1/(d - 1) and the denominator is positive.
inline BoundReport turan_bound(const CodeParameters& params, int d, double tol = kDefaultTolerance) {
  if (!params.has_p()) throw ParameterDomainError("turan_bound needs beta < 0");
  if (d < 2) throw ParameterDomainError("turan_bound needs d >= 2");
  BoundReport r;
  r.name = BoundName::turan;
  const Scalar gate = Scalar(1) + Scalar(1) / Scalar(d - 1);
  if (!detail::strictly_less(params.p(), gate, tol)) {
    r.applicable = false;
    r.note = "gate p < 1 + 1/(d-1) fails: p=" + params.p().str();
    return r;
  }
  const Scalar denom = (-params.alpha()) / (params.alpha() - params.beta()) + Scalar(1) / Scalar(d);
  if (sign(denom) <= 0 || std::abs(denom.value()) <= tol) {
    r.applicable = false;
    r.note = "(-alpha)/(alpha-beta) + 1/d is not positive";
    return r;
  }
  const Scalar term = params.mu() / denom;
  const Scalar value = compare(term, Scalar(d + 1), 0.0) == Order::greater ? term : Scalar(d + 1);
  detail::set_value(r, value, tol);
  return r;
}

/// 2^k (d + 2 - k) - 1, applicable when mu > sqrt(floor(m/2) ceil(m/2)), m = d + 2 - k.
inline BoundReport power_bound(const CodeParameters& params, int d, int k, double tol = kDefaultTolerance) {
  if (d < 1) throw ParameterDomainError("power_bound needs d >= 1");
  if (k < 0 || k > d + 1 || k > 60) throw ParameterDomainError("power_bound needs 0 <= k <= d+1");
  BoundReport r;
  r.name = BoundName::power;
  r.witness = "k=" + std::to_string(k);
  const int m = d + 2 - k;
  const Scalar gate(static_cast<int>((m / 2) * ((m + 1) / 2)));
  if (!detail::strictly_less(gate, params.mu() * params.mu(), tol)) {
    r.applicable = false;
    r.note = "gate mu > sqrt(" + gate.str() + ") fails";
    return r;
  }
  r.integer_value = (1LL << k) * m - 1;
  r.value = static_cast<double>(r.integer_value);
  return r;
}

/// Smallest applicable power bound over k = 0..d+1.
inline BoundReport best_power_bound(const CodeParameters& params, int d, double tol = kDefaultTolerance) {
  BoundReport best;
  best.name = BoundName::power;
  best.applicable = false;
  best.note = "no k passes the gate";
  for (int k = 0; k <= std::min(d + 1, 60); ++k) {
    BoundReport r = power_bound(params, d, k, tol);
    if (r.applicable && (!best.applicable || r.integer_value < best.integer_value)) best = r;
  }
  return best;
}

inline BoundReport dgs_report(int d) {
  BoundReport r;
  r.name = BoundName::dgs;
  r.integer_value = dgs_bound(d);
  r.value = static_cast<double>(r.integer_value);
  return r;
}

}  // namespace twodist
