#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "twodist/bounds/bounds.hpp"
#include "twodist/certificates/alpha.hpp"
#include "twodist/certificates/beta.hpp"
#include "twodist/certificates/code.hpp"
#include "twodist/certificates/params.hpp"
#include "twodist/certificates/realize.hpp"
#include "twodist/certificates/shift.hpp"
#include "twodist/errors.hpp"
#include "twodist/graphs/enumerate.hpp"
#include "twodist/graphs/graph6.hpp"
#include "twodist/linalg/eigen.hpp"
#include "twodist/linalg/rational.hpp"

namespace twodist {

inline constexpr int kSearchMaxOrder = 8;

/// Canonical graphs of orders 1..n_max with their graph6 strings and
/// adjacency spectra, ordered by (order, canonical key).
class GraphCatalog {
 public:
  struct Entry {
    Graph graph;
    std::string graph6;
    Spectrum spectrum;
  };

  explicit GraphCatalog(int n_max) : n_max_(n_max) {
    if (n_max < 1 || n_max > kSearchMaxOrder) throw SizeGuardError("catalog supports 1 <= n_max <= 8");
    for (const Graph& g : canonical_graphs_up_to(n_max))
      entries_.push_back({g, emit_graph6(g), eigen_decompose(adjacency_matrix(g))});
  }

  int n_max() const { return n_max_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  int n_max_;
  std::vector<Entry> entries_;
};

enum class CapacityMode { strict, equal };

struct SearchOptions {
  int n_max = 6;
  int workers = 1;
  double tol = kDefaultTolerance;
  Backend backend = Backend::automatic;
  const GraphCatalog* catalog = nullptr;  ///< reused when it covers n_max
};

struct SearchResult {
  std::string query;
  int value = 0;
  std::vector<std::string> extremal_graphs;  ///< sorted graph6
  bool exhaustive = false;
  int ambiguous = 0;  ///< float decisions that fell in the grey band
};

namespace detail {

/// Runs pred(i) for i in [0, count) on `workers` threads over contiguous
/// chunks. Results land in per-index slots, so the output is independent of
/// the worker count.
template <class Pred>
std::vector<char> parallel_flags(std::size_t count, int workers, Pred pred) {
  std::vector<char> flags(count, 0);
  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  if (w == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) flags[i] = pred(i);
    return flags;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(w);
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t lo = count * t / w;
    const std::size_t hi = count * (t + 1) / w;
    pool.emplace_back([&, lo, hi, t] {
      try {
        for (std::size_t i = lo; i < hi; ++i) flags[i] = pred(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return flags;
}

class CatalogHandle {
 public:
  explicit CatalogHandle(const SearchOptions& opt) {
    if (opt.n_max < 1 || opt.n_max > kSearchMaxOrder) throw SizeGuardError("search supports 1 <= n_max <= 8");
    if (opt.catalog && opt.catalog->n_max() >= opt.n_max) {
      catalog_ = opt.catalog;
    } else {
      owned_ = std::make_unique<GraphCatalog>(opt.n_max);
      catalog_ = owned_.get();
    }
    for (std::size_t i = 0; i < catalog_->size(); ++i)
      if ((*catalog_)[i].graph.order() <= opt.n_max) count_ = i + 1;
  }
  const GraphCatalog& operator*() const { return *catalog_; }
  std::size_t count() const { return count_; }

 private:
  std::unique_ptr<GraphCatalog> owned_;
  const GraphCatalog* catalog_ = nullptr;
  std::size_t count_ = 0;
};

inline bool search_exact(const Scalar& p, const Scalar& mu, Backend backend) {
  const bool rational = p.is_exact() && mu.is_exact();
  if (backend == Backend::exact && !rational) throw ParameterDomainError("exact backend requested for irrational parameters");
  return backend == Backend::exact || (backend == Backend::automatic && rational);
}

struct Qualifier {
  int r;
  Scalar p;
  Scalar mu;
  CapacityMode mode;
  bool exact;
  double tol;

  /// Bit 0: qualifies. Bit 1: some float decision fell in the grey band.
  char operator()(const GraphCatalog::Entry& e) const {
    const ShiftAnalysis m = exact ? analyze_shift_exact(e.graph, *mu.exact(), +1)
                                  : analyze_shift(e.graph, e.spectrum, mu.value(), +1, tol);
    bool amb = m.ambiguous;
    bool ok = m.psd() && m.j_in_range && m.rank() <= r;
    if (ok) {
      const Order o = compare(*m.quadform, p, m.threshold);
      amb = amb || comparison_ambiguous(*m.quadform, p, m.threshold);
      ok = mode == CapacityMode::strict ? o == Order::less : o == Order::equal;
    }
    if (ok) return amb ? 3 : 1;
    return amb ? 2 : 0;
  }
};

inline SearchResult collect(const GraphCatalog& cat, std::size_t count, const std::vector<char>& flags, std::string query,
                            int n_max) {
  SearchResult out;
  out.query = std::move(query);
  for (std::size_t i = 0; i < count; ++i) {
    if (flags[i] >= 2) ++out.ambiguous;
    if (!(flags[i] & 1)) continue;
    const int n = cat[i].graph.order();
    if (n > out.value) {
      out.value = n;
      out.extremal_graphs.clear();
    }
    if (n == out.value) out.extremal_graphs.push_back(cat[i].graph6);
  }
  std::sort(out.extremal_graphs.begin(), out.extremal_graphs.end());
  out.exhaustive = out.value < n_max;
  return out;
}

inline SearchResult merge_max(SearchResult a, const SearchResult& b, std::string query) {
  if (b.value > a.value) {
    a.value = b.value;
    a.extremal_graphs = b.extremal_graphs;
  } else if (b.value == a.value) {
    a.extremal_graphs.insert(a.extremal_graphs.end(), b.extremal_graphs.begin(), b.extremal_graphs.end());
    std::sort(a.extremal_graphs.begin(), a.extremal_graphs.end());
    a.extremal_graphs.erase(std::unique(a.extremal_graphs.begin(), a.extremal_graphs.end()), a.extremal_graphs.end());
  }
  a.ambiguous += b.ambiguous;
  a.exhaustive = a.exhaustive && b.exhaustive;
  a.query = std::move(query);
  return a;
}

}  // namespace detail

/// Largest order of a graph with lambda_min >= -mu, j in R(A + mu*I),
/// rank(A + mu*I) <= r and q < p (strict) or q = p (equal). Value 0 when no
/// graph qualifies. Disconnected graphs are included.
inline SearchResult capacity(int r, const Scalar& p, const Scalar& mu, CapacityMode mode, const SearchOptions& opt = {}) {
  if (compare(mu, Scalar(1), 0.0) != Order::greater) throw ParameterDomainError("capacity needs mu > 1");
  if (sign(p) <= 0) throw ParameterDomainError("capacity needs p > 0");
  if (r < 0) throw ParameterDomainError("capacity needs r >= 0");
  const detail::CatalogHandle cat(opt);
  const detail::Qualifier q{r, p, mu, mode, detail::search_exact(p, mu, opt.backend), opt.tol};
  const auto flags = detail::parallel_flags(cat.count(), opt.workers, [&](std::size_t i) { return q((*cat)[i]); });
  std::string query = std::string(mode == CapacityMode::strict ? "N" : "N*") + "(r=" + std::to_string(r) +
                      ",p=" + p.str() + ",mu=" + mu.str() + ",n_max=" + std::to_string(opt.n_max) + ")";
  return detail::collect(*cat, cat.count(), flags, std::move(query), opt.n_max);
}

/// max(N(d, p, mu), N*(d + 1, p, mu)): the largest spherical {alpha,beta}-code
/// in R^d with beta < 0, found among alpha-graphs of order <= n_max.
/// Extremal graphs are realized in R^d and verified; for alpha > 0 their
/// complements must also pass certify_beta with the same rank.
inline SearchResult max_code_size(const CodeParameters& params, int d, const SearchOptions& opt = {}) {
  if (!params.has_p()) throw ParameterDomainError("max_code_size needs beta < 0");
  if (d < 1) throw ParameterDomainError("max_code_size needs d >= 1");
  std::optional<GraphCatalog> local;
  SearchOptions o = opt;
  if (!o.catalog || o.catalog->n_max() < o.n_max) {
    local.emplace(o.n_max);
    o.catalog = &*local;
  }
  const SearchResult strict = capacity(d, params.p(), params.mu(), CapacityMode::strict, o);
  const SearchResult equal = capacity(d + 1, params.p(), params.mu(), CapacityMode::equal, o);
  SearchResult out = detail::merge_max(strict, equal,
                                       "N_{" + params.alpha().str() + "," + params.beta().str() + "}(d=" +
                                           std::to_string(d) + ",n_max=" + std::to_string(o.n_max) + ")");
  out.exhaustive = out.value < o.n_max || dgs_bound(d) <= o.n_max;

  const double tol = o.tol;
  for (const std::string& code6 : out.extremal_graphs) {
    const Graph g = parse_graph6(code6);
    const AlphaCertificate cert = certify_alpha(g, params, tol, o.backend);
    if (!cert.valid || cert.rank_r > d) throw CertificateInvalidError("extremal graph " + code6 + " does not re-certify");
    const SphericalCode code = realize_from_alpha(g, params, tol, o.backend, d);
    if (!verify_code(code, 1e-8).valid) throw ReconstructionResidualError("extremal code " + code6 + " fails verification");
    if (sign(params.alpha()) > 0) {
      const BetaCertificate beta = certify_beta(g.complement(), params, tol, o.backend);
      if (!beta.valid || beta.rank_r != cert.rank_r)
        throw CertificateInvalidError("complement of " + code6 + " disagrees with the beta route");
    }
  }
  return out;
}

struct NeighborhoodCapacity {
  SearchResult f;            ///< max(N(d, p', mu), N*(d, p', mu)), p' = (alpha-beta)/(alpha^2-beta)
  SearchResult recursed;     ///< N_{alpha0,beta0}(d) through the capacity formula
  Scalar alpha0;
  Scalar beta0;
  bool holds = false;        ///< f <= N_{alpha0,beta0}(d)
};

/// Computes f(alpha, beta, d) and checks it against N_{alpha0,beta0}(d).
/// By the recursion identities alpha0, beta0 share mu and have p0 = p', so the
/// second value is max(N(d, p', mu), N*(d+1, p', mu)); this stays valid when
/// beta0 < -1.
inline NeighborhoodCapacity neighborhood_capacity_f(const CodeParameters& params, int d, const SearchOptions& opt = {}) {
  if (!params.has_p()) throw ParameterDomainError("f needs beta < 0");
  if (d < 1) throw ParameterDomainError("f needs d >= 1");
  std::optional<GraphCatalog> local;
  SearchOptions o = opt;
  if (!o.catalog || o.catalog->n_max() < o.n_max) {
    local.emplace(o.n_max);
    o.catalog = &*local;
  }
  const Scalar a = params.alpha();
  const Scalar b = params.beta();
  const Scalar p_prime = (a - b) / (a * a - b);
  const Scalar& mu = params.mu();
  NeighborhoodCapacity out;
  const RecursionMap map = recursion_map(a, b, o.tol);
  out.alpha0 = map.alpha0;
  out.beta0 = map.beta0;
  const std::string dims = "d=" + std::to_string(d) + ",n_max=" + std::to_string(o.n_max) + ")";
  out.f = detail::merge_max(capacity(d, p_prime, mu, CapacityMode::strict, o),
                            capacity(d, p_prime, mu, CapacityMode::equal, o), "f(" + a.str() + "," + b.str() + "," + dims);
  const Scalar p0 = (map.alpha0 - map.beta0) / (-map.beta0);
  const Scalar mu0 = (Scalar(1) - map.beta0) / (map.alpha0 - map.beta0);
  out.recursed = detail::merge_max(capacity(d, p0, mu0, CapacityMode::strict, o),
                                   capacity(d + 1, p0, mu0, CapacityMode::equal, o),
                                   "N_{" + map.alpha0.str() + "," + map.beta0.str() + "}(" + dims);
  out.holds = map.holds && out.f.value <= out.recursed.value;
  return out;
}

struct CrossCheckReport {
  int checked = 0;
  int valid = 0;
  std::vector<std::string> mismatches;  ///< "graph6 @ params: reason"

  bool ok() const { return mismatches.empty(); }
};

/// Compares certify_alpha on every canonical graph of order <= n_max against
/// the Gram matrix (alpha-beta)(A+mu*I) + beta*J factored exactly: the
/// certificate is valid iff that matrix is PSD, its rank is the code rank,
/// and PSD candidates must realize and re-extract.
inline CrossCheckReport oracle_cross_check(int n_max, const std::vector<CodeParameters>& grid,
                                           double tol = kDefaultTolerance) {
  if (n_max < 1 || n_max > 7) throw SizeGuardError("oracle_cross_check supports 1 <= n_max <= 7");
  CrossCheckReport out;
  for (const Graph& g : canonical_graphs_up_to(n_max)) {
    const std::string code6 = emit_graph6(g);
    const RationalMatrix a = adjacency_matrix_exact(g);
    for (const CodeParameters& params : grid) {
      if (!params.is_exact() || !params.has_p()) throw ParameterDomainError("oracle grid needs rational points with beta < 0");
      ++out.checked;
      const Rational alpha = *params.alpha().exact();
      const Rational beta = *params.beta().exact();
      RationalMatrix gram(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j)
          gram.set(i, j, i == j ? Rational(1) : (a(i, j) != 0 ? alpha : beta));
      const ExactLdl ldl(gram);
      const AlphaCertificate cert = certify_alpha(g, params, tol, Backend::exact);
      const std::string where = code6 + " @ " + params.describe() + ": ";
      if (cert.valid != ldl.psd()) {
        out.mismatches.push_back(where + "validity differs from Gram PSD test");
        continue;
      }
      if (!cert.valid) continue;
      ++out.valid;
      if (cert.rank_r != ldl.rank()) {
        out.mismatches.push_back(where + "rank " + std::to_string(cert.rank_r) + " vs Gram rank " + std::to_string(ldl.rank()));
        continue;
      }
      try {
        const SphericalCode code = realize_from_alpha(g, params, tol);
        if (alpha_graph(code, 1e-8) != g) out.mismatches.push_back(where + "re-extracted graph differs");
      } catch (const Error& e) {
        out.mismatches.push_back(where + e.what());
      }
    }
  }
  return out;
}

/// beta in {-1, -3/4, -1/2, -1/4} x alpha in {-1/4, 0, 1/4, 1/2}, beta < alpha.
inline std::vector<CodeParameters> rational_grid() {
  std::vector<CodeParameters> out;
  const Rational betas[] = {Rational(-1), Rational(-3, 4), Rational(-1, 2), Rational(-1, 4)};
  const Rational alphas[] = {Rational(-1, 4), Rational(0), Rational(1, 4), Rational(1, 2)};
  for (const auto& b : betas)
    for (const auto& a : alphas)
      if (b < a) out.push_back(CodeParameters::exact(a, b));
  return out;
}

/// alpha in {1/4, 1/2, 3/4} x beta in {-1, -3/4, -1/2, -1/4}, for the beta route.
inline std::vector<CodeParameters> rational_beta_grid() {
  std::vector<CodeParameters> out;
  const Rational betas[] = {Rational(-1), Rational(-3, 4), Rational(-1, 2), Rational(-1, 4)};
  const Rational alphas[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (const auto& b : betas)
    for (const auto& a : alphas) out.push_back(CodeParameters::exact(a, b));
  return out;
}

}  // namespace twodist
