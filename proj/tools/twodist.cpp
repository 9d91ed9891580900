#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "twodist/twodist.hpp"

namespace {

using namespace twodist;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string num(const Scalar& s) { return s.is_exact() ? s.str() : num(s.value()); }

ordered_json json_num(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.value();
}

struct Options {
  std::string alpha, beta, mu, p, graph, in, out, kind = "alpha", format = "csv", mode = "strict", query = "max";
  int d = 0, k = -1, r = -1, max_n = 6, min_n = 1, workers = 1;
  long long f = -1;
  double tol = kDefaultTolerance;
  bool exact = false, connected = false, labeled = false;
};

Scalar parse_scalar(const std::string& text, bool exact, const char* flag) {
  try {
    if (exact || text.find('/') != std::string::npos) return Scalar(parse_rational(text));
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return Scalar(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + flag + " value '" + text + "'");
  }
}

/// Fractions switch the whole run to exact arithmetic; so does --exact.
CodeParameters parse_params(const Options& o) {
  if (o.alpha.empty() || o.beta.empty()) throw UsageError("--alpha and --beta are required");
  const bool exact = o.exact || o.alpha.find('/') != std::string::npos || o.beta.find('/') != std::string::npos;
  try {
    return CodeParameters(parse_scalar(o.alpha, exact, "--alpha"), parse_scalar(o.beta, exact, "--beta"));
  } catch (const ParameterDomainError& e) {
    throw UsageError(e.what());
  }
}

Backend backend_for(const Options& o) { return o.exact ? Backend::exact : Backend::automatic; }

std::vector<Graph> read_graphs(const Options& o) {
  std::vector<Graph> out;
  if (!o.graph.empty()) out.push_back(parse_graph6(o.graph));
  if (!o.in.empty()) {
    std::ifstream in(o.in);
    if (!in) throw UsageError("cannot open " + o.in);
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) out.push_back(parse_graph6(line));
    }
  }
  if (out.empty()) throw UsageError("give a graph with --graph or a graph6 file with --in");
  return out;
}

std::ostream& output(const Options& o, std::ofstream& file) {
  if (o.out.empty()) return std::cout;
  file.open(o.out);
  if (!file) throw UsageError("cannot write " + o.out);
  return file;
}

void require_kind(const Options& o) {
  if (o.kind != "alpha" && o.kind != "beta") throw UsageError("--kind must be alpha or beta");
}

int cmd_verify(const Options& o) {
  SphericalCode code = read_code_file(o.in);
  if (!o.alpha.empty() || !o.beta.empty()) code.params = parse_params(o);
  const CodeVerification v = verify_code(code, o.tol);
  if (v.valid) {
    std::cout << "valid,size=" << code.size() << ",dim=" << code.dim << ",rank=" << code_rank(code, o.tol) << "\n";
    return kExitOk;
  }
  std::cout << "invalid\n";
  for (const auto& n : v.norm_violations) std::cout << "norm," << n.i << "," << num(n.norm) << "\n";
  for (const auto& p : v.pair_violations) std::cout << "pair," << p.i << "," << p.j << "," << num(p.inner) << "\n";
  return kExitFailed;
}

int cmd_extract(const Options& o) {
  require_kind(o);
  SphericalCode code = read_code_file(o.in);
  if (!o.alpha.empty() || !o.beta.empty()) code.params = parse_params(o);
  std::cout << emit_graph6(o.kind == "alpha" ? alpha_graph(code, o.tol) : beta_graph(code, o.tol)) << "\n";
  return kExitOk;
}

struct CertRow {
  std::string graph, kind, which, reason;
  bool valid = false, equality = false, exact = false, ambiguous = false;
  int rank = 0;
  std::optional<Scalar> quadform;
};

CertRow certify_row(const Graph& g, const CodeParameters& params, const Options& o) {
  CertRow row;
  row.graph = emit_graph6(g);
  row.kind = o.kind;
  if (o.kind == "alpha") {
    const AlphaCertificate c = certify_alpha(g, params, o.tol, backend_for(o));
    row.valid = c.valid;
    row.which = c.valid ? (c.equality_case ? "equality" : "strict") : "none";
    row.rank = c.rank_r;
    row.quadform = c.quadform;
    row.equality = c.equality_case;
    row.exact = c.exact;
    row.ambiguous = c.ambiguous;
    if (c.failure_reason) row.reason = to_string(*c.failure_reason);
  } else {
    const BetaCertificate c = certify_beta_graph(g, params, o.tol, backend_for(o));
    row.valid = c.valid;
    row.which = to_string(c.which);
    row.rank = c.rank_r;
    row.quadform = c.quadform;
    row.equality = c.equality_case;
    row.exact = c.exact;
    row.ambiguous = c.ambiguous;
    if (c.failure_reason) row.reason = to_string(*c.failure_reason);
  }
  return row;
}

int cmd_certify(const Options& o) {
  require_kind(o);
  const CodeParameters params = parse_params(o);
  const std::vector<Graph> graphs = read_graphs(o);
  std::vector<CertRow> rows;
  for (const Graph& g : graphs) rows.push_back(certify_row(g, params, o));
  std::ofstream file;
  std::ostream& out = output(o, file);
  if (o.format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["graph"] = r.graph;
      j["kind"] = r.kind;
      j["valid"] = r.valid;
      j["case"] = r.which;
      j["rank"] = r.rank;
      j["quadform"] = r.quadform ? json_num(*r.quadform) : ordered_json();
      j["equality"] = r.equality;
      j["reason"] = r.reason;
      j["backend"] = r.exact ? "exact" : "float";
      j["ambiguous"] = r.ambiguous;
      doc.push_back(j);
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "graph,kind,valid,case,rank,quadform,equality,reason,backend,ambiguous\n";
    for (const auto& r : rows)
      out << r.graph << "," << r.kind << "," << (r.valid ? "true" : "false") << "," << r.which << "," << r.rank << ","
          << (r.quadform ? num(*r.quadform) : "") << "," << (r.equality ? "true" : "false") << "," << r.reason << ","
          << (r.exact ? "exact" : "float") << "," << (r.ambiguous ? "true" : "false") << "\n";
  }
  for (const auto& r : rows)
    if (!r.valid) return kExitFailed;
  return kExitOk;
}

int cmd_realize(const Options& o) {
  require_kind(o);
  const CodeParameters params = parse_params(o);
  if (o.graph.empty()) throw UsageError("--graph is required");
  const Graph g = parse_graph6(o.graph);
  std::optional<int> dim;
  if (o.d > 0) dim = o.d;
  const SphericalCode code = o.kind == "alpha" ? realize_from_alpha(g, params, o.tol, backend_for(o), dim)
                                               : realize_from_beta(g, params, o.tol, backend_for(o), dim);
  if (o.out.empty()) {
    std::cout << code_to_json(code);
  } else {
    write_code_file(o.out, code);
  }
  return kExitOk;
}

void bound_row(std::ostream& out, const BoundReport& r, const std::string& extra = "") {
  std::string witness = r.witness;
  if (!r.note.empty()) witness += (witness.empty() ? "" : " ") + r.note;
  if (!extra.empty()) witness += (witness.empty() ? "" : " ") + extra;
  out << to_string(r.name) << "," << (r.applicable ? "true" : "false") << ",";
  if (r.applicable) out << (r.exact_value ? r.exact_value->get_str() : num(r.value)) << "," << r.integer_value;
  else out << ",";
  out << "," << (r.holds ? (*r.holds ? "true" : "false") : "") << "," << witness << "\n";
}

constexpr const char* kBoundHeader = "bound,applicable,value,integer,holds,witness\n";

/// --mu without --alpha/--beta: sandwich bounds over a graph family.
int bounds_sandwich(const Options& o) {
  if (!o.alpha.empty() || !o.beta.empty()) throw UsageError("--mu cannot be combined with --alpha/--beta");
  if (o.d < 1) throw UsageError("--d is required with --mu");
  const Scalar mu = parse_scalar(o.mu, o.exact, "--mu");
  GraphFamily family{{}, DedupMode::canonical};
  if (!o.graph.empty() || !o.in.empty()) family.members = read_graphs(o);
  else family.members = canonical_graphs_up_to(o.max_n);
  const SandwichResult s = sandwich_bounds(mu, o.d, family, o.tol);
  std::ofstream file;
  std::ostream& out = output(o, file);
  out << kBoundHeader;
  std::string w = "lower:";
  for (const auto& x : s.lower_witnesses) w += " " + x;
  w += " upper:";
  for (const auto& x : s.upper_witnesses) w += " " + x;
  out << "sandwich_lower,true," << s.lower << "," << s.lower << ",," << w << "\n";
  out << "sandwich_upper,true," << num(s.upper) << "," << static_cast<long long>(std::floor(s.upper + 1e-9)) << ","
      << (s.holds ? "true" : "false") << ",members=" << s.members_used << (s.note.empty() ? "" : " " + s.note) << "\n";
  return s.holds ? kExitOk : kExitFailed;
}

/// --graph: the graph inequalities for one alpha-graph.
int bounds_graph(const Options& o, const CodeParameters& params) {
  const Graph g = parse_graph6(o.graph);
  const AlphaCertificate cert = certify_alpha(g, params, o.tol, backend_for(o));
  std::ofstream file;
  std::ostream& out = output(o, file);
  out << kBoundHeader;
  if (!cert.valid) {
    out << "certificate,false,,,false," << to_string(*cert.failure_reason) << "\n";
    return kExitFailed;
  }
  VertexSet all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  std::vector<BoundReport> reports{check_subgraph_inequality(g, cert, all, params, o.tol),
                                   check_independence_bound(g, cert, params, o.tol),
                                   check_clique_free(g, cert.rank_r)};
  for (int u = 0; u < g.order(); ++u) reports.push_back(check_neighborhood_bounds(g, cert, u, params, o.tol));
  bool all_hold = true;
  for (const auto& r : reports) {
    bound_row(out, r);
    all_hold = all_hold && r.holds.value_or(true);
  }
  return all_hold ? kExitOk : kExitFailed;
}

int cmd_bounds(const Options& o) {
  if (!o.mu.empty()) return bounds_sandwich(o);
  const CodeParameters params = parse_params(o);
  if (!o.graph.empty()) return bounds_graph(o, params);
  if (o.d < 1) throw UsageError("--d is required");
  std::vector<BoundReport> rows{dgs_report(o.d)};
  std::string map_row;
  bool all_hold = true;
  if (params.has_p()) {
    if (o.d >= 2) rows.push_back(turan_bound(params, o.d, o.tol));
    rows.push_back(o.k >= 0 ? power_bound(params, o.d, o.k, o.tol) : best_power_bound(params, o.d, o.tol));
    if (o.f >= 0) rows.push_back(recursion_bound(params, o.f, o.tol));
    if (sign(params.alpha() + Scalar(1)) != 0) {
      const RecursionMap m = recursion_map(params.alpha(), params.beta(), o.tol);
      map_row = std::string("recursion_map,true,,,") + (m.holds ? "true" : "false") + ",alpha0=" + num(m.alpha0) +
                " beta0=" + num(m.beta0) + "\n";
      all_hold = m.holds;
    }
  }
  std::ofstream file;
  std::ostream& out = output(o, file);
  out << kBoundHeader;
  for (const auto& r : rows) bound_row(out, r);
  out << map_row;
  return all_hold ? kExitOk : kExitFailed;
}

ordered_json witness_json(const std::string& code6, const CodeParameters& params, const Options& o) {
  const Graph g = parse_graph6(code6);
  const AlphaCertificate c = certify_alpha(g, params, o.tol, backend_for(o));
  ordered_json j;
  j["graph"] = code6;
  j["valid"] = c.valid;
  j["rank"] = c.rank_r;
  j["quadform"] = c.quadform ? json_num(*c.quadform) : ordered_json();
  j["equality"] = c.equality_case;
  return j;
}

void search_row(std::ostream& out, const SearchResult& r) {
  out << "\"" << r.query << "\"," << r.value << "," << (r.exhaustive ? "true" : "false") << ",";
  for (std::size_t i = 0; i < r.extremal_graphs.size(); ++i) out << (i ? ";" : "") << r.extremal_graphs[i];
  out << "\n";
}

ordered_json search_json(const SearchResult& r) {
  ordered_json j;
  j["query"] = r.query;
  j["value"] = r.value;
  j["exhaustive"] = r.exhaustive;
  j["witnesses"] = r.extremal_graphs;
  j["ambiguous"] = r.ambiguous;
  return j;
}

int cmd_search(const Options& o) {
  if (o.workers < 1) throw UsageError("--workers must be positive");
  SearchOptions so;
  so.n_max = o.max_n;
  so.workers = o.workers;
  so.tol = o.tol;
  so.backend = backend_for(o);
  std::vector<SearchResult> results;
  ordered_json doc = ordered_json::array();
  if (!o.mu.empty() && o.alpha.empty()) {
    if (o.r < 0 || o.p.empty()) throw UsageError("capacity search needs --r, --p and --mu");
    if (o.mode != "strict" && o.mode != "equal") throw UsageError("--mode must be strict or equal");
    const bool exact = o.exact || o.p.find('/') != std::string::npos || o.mu.find('/') != std::string::npos;
    const SearchResult r = capacity(o.r, parse_scalar(o.p, exact, "--p"), parse_scalar(o.mu, exact, "--mu"),
                                    o.mode == "strict" ? CapacityMode::strict : CapacityMode::equal, so);
    results.push_back(r);
    doc.push_back(search_json(r));
  } else {
    const CodeParameters params = parse_params(o);
    if (o.d < 1) throw UsageError("--d is required");
    if (o.query == "max") {
      const SearchResult r = max_code_size(params, o.d, so);
      results.push_back(r);
      ordered_json j = search_json(r);
      j["certificates"] = ordered_json::array();
      for (const auto& w : r.extremal_graphs) j["certificates"].push_back(witness_json(w, params, o));
      doc.push_back(j);
    } else if (o.query == "f") {
      const NeighborhoodCapacity nc = neighborhood_capacity_f(params, o.d, so);
      results.push_back(nc.f);
      results.push_back(nc.recursed);
      ordered_json j = search_json(nc.f);
      j["bound"] = search_json(nc.recursed);
      j["holds"] = nc.holds;
      doc.push_back(j);
    } else {
      throw UsageError("--query must be max or f");
    }
  }
  std::ofstream file;
  std::ostream& out = output(o, file);
  if (o.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << "query,value,exhaustive,witnesses\n";
    for (const auto& r : results) search_row(out, r);
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  if (o.min_n < 1 || o.min_n > o.max_n) throw UsageError("need 1 <= --min-n <= --max-n");
  const int cap = o.labeled ? kLabeledEnumerationMaxOrder : 8;
  if (o.max_n > cap) throw UsageError("--max-n must be at most " + std::to_string(cap));
  std::ofstream file;
  std::ostream& out = output(o, file);
  for (int n = o.min_n; n <= o.max_n; ++n)
    for_each_graph(n, o.connected, o.labeled ? DedupMode::labeled : DedupMode::canonical,
                   [&](const Graph& g) { out << emit_graph6(g) << "\n"; });
  return kExitOk;
}

int cmd_crosscheck(const Options& o) {
  const std::vector<CodeParameters> grid =
      o.alpha.empty() ? rational_grid() : std::vector<CodeParameters>{parse_params(o)};
  const CrossCheckReport r = oracle_cross_check(o.max_n, grid, o.tol);
  std::cout << "checked," << r.checked << "\nvalid," << r.valid << "\nmismatches," << r.mismatches.size() << "\n";
  for (const auto& m : r.mismatches) std::cout << "mismatch," << m << "\n";
  return r.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical two-distance codes: certificates, bounds and exhaustive search"};
  app.require_subcommand(1);
  Options o;

  auto params = [&](CLI::App* s) {
    s->add_option("--alpha", o.alpha, "inner product alpha (decimal or a/b)");
    s->add_option("--beta", o.beta, "inner product beta (decimal or a/b)");
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--tol", o.tol, "base tolerance")->capture_default_str();
    s->add_flag("--exact", o.exact, "exact rational arithmetic");
  };
  auto format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "check that a code file is a two-distance code");
  verify->add_option("--in", o.in, "code JSON")->required();
  params(verify);
  common(verify);

  auto* extract = app.add_subcommand("extract", "print the alpha- or beta-graph of a code");
  extract->add_option("--in", o.in, "code JSON")->required();
  extract->add_option("--kind", o.kind, "alpha or beta")->capture_default_str();
  params(extract);
  common(extract);

  auto* certify = app.add_subcommand("certify", "certify graphs as alpha- or beta-graphs");
  params(certify);
  common(certify);
  format(certify);
  certify->add_option("--graph", o.graph, "graph6 string");
  certify->add_option("--in", o.in, "file of graph6 lines");
  certify->add_option("--out", o.out, "output file");
  certify->add_option("--kind", o.kind, "alpha or beta")->capture_default_str();

  auto* realize = app.add_subcommand("realize", "build a code from a certified graph");
  params(realize);
  common(realize);
  realize->add_option("--graph", o.graph, "graph6 string")->required();
  realize->add_option("--out", o.out, "code JSON output");
  realize->add_option("--kind", o.kind, "alpha or beta")->capture_default_str();
  realize->add_option("--d", o.d, "ambient dimension (default: code rank)");

  auto* bounds = app.add_subcommand("bounds", "evaluate upper bounds or check graph inequalities");
  params(bounds);
  common(bounds);
  bounds->add_option("--d", o.d, "dimension");
  bounds->add_option("--k", o.k, "power-bound index (default: best over k)");
  bounds->add_option("--f", o.f, "neighbourhood capacity value for the recursion bound");
  bounds->add_option("--mu", o.mu, "shift for sandwich bounds");
  bounds->add_option("--graph", o.graph, "graph6 string");
  bounds->add_option("--in", o.in, "file of graph6 lines (sandwich family)");
  bounds->add_option("--max-n", o.max_n, "family order cap for sandwich bounds")->capture_default_str();
  bounds->add_option("--out", o.out, "output file");

  auto* search = app.add_subcommand("search", "exhaustive search over canonical graphs");
  params(search);
  common(search);
  format(search);
  search->add_option("--d", o.d, "dimension");
  search->add_option("--r", o.r, "rank cap (capacity query)");
  search->add_option("--p", o.p, "quadform bound (capacity query)");
  search->add_option("--mu", o.mu, "shift (capacity query)");
  search->add_option("--mode", o.mode, "strict or equal (capacity query)")->capture_default_str();
  search->add_option("--query", o.query, "max or f")->capture_default_str();
  search->add_option("--max-n", o.max_n, "largest order searched")->capture_default_str();
  search->add_option("--workers", o.workers, "worker threads")->capture_default_str();
  search->add_option("--out", o.out, "output file");

  auto* enumerate = app.add_subcommand("enumerate", "print graphs in graph6");
  enumerate->add_option("--max-n", o.max_n, "largest order")->capture_default_str();
  enumerate->add_option("--min-n", o.min_n, "smallest order")->capture_default_str();
  enumerate->add_flag("--connected", o.connected, "connected graphs only");
  enumerate->add_flag("--labeled", o.labeled, "all labelled graphs instead of one per class");
  enumerate->add_option("--out", o.out, "output file");

  auto* crosscheck = app.add_subcommand("crosscheck", "compare certificates with a direct Gram-matrix oracle");
  params(crosscheck);
  common(crosscheck);
  crosscheck->add_option("--max-n", o.max_n, "largest order")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*extract) return cmd_extract(o);
    if (*certify) return cmd_certify(o);
    if (*realize) return cmd_realize(o);
    if (*bounds) return cmd_bounds(o);
    if (*search) return cmd_search(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*crosscheck) return cmd_crosscheck(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterDomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Graph6Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeGuardError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cout << "error," << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
