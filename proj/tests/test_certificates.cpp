#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "twodist/twodist.hpp"

using namespace twodist;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

bool same_labeled(const Graph& a, const Graph& b) { return a.order() == b.order() && a.edges() == b.edges(); }

Vector unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

SphericalCode square(double alpha = 0.0, double beta = -1.0) {
  return SphericalCode{2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, CodeParameters::real(alpha, beta)};
}

SphericalCode pentagon() {
  SphericalCode c{2, {}, CodeParameters::pentagon()};
  for (int k = 0; k < 5; ++k) c.vectors.push_back(unit(2 * std::numbers::pi * k / 5));
  return c;
}

double max_abs_diff(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  double out = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out = std::max(out, std::abs(a(i, j) - b(i, j)));
  return out;
}

/// Gram matrix with unit diagonal, `on` for adjacent pairs and `off` otherwise.
oracle::QMat gram_oracle(const Graph& g, const Rational& on, const Rational& off) {
  const auto n = static_cast<std::size_t>(g.order());
  oracle::QMat m(n, oracle::QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = i == j ? Rational(1) : (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? on : off);
  return m;
}

Rational ex(const Scalar& s) { return *s.exact(); }

CodeParameters q(long an, long ad, long bn, long bd) { return CodeParameters::exact(Rational(an, ad), Rational(bn, bd)); }

}  // namespace

TEST(Params, DerivedQuantities) {
  const CodeParameters p = q(0, 1, -1, 1);
  EXPECT_EQ(ex(p.mu()), Rational(2));
  EXPECT_EQ(ex(p.lambda()), Rational(1));
  EXPECT_EQ(ex(p.p()), Rational(1));
  const CodeParameters h = q(1, 3, -1, 3);
  EXPECT_EQ(ex(h.mu()), Rational(2));
  EXPECT_EQ(ex(h.lambda()), Rational(1));
  EXPECT_EQ(ex(h.p()), Rational(2));
  const CodeParameters pent = CodeParameters::pentagon();
  EXPECT_NEAR(pent.mu().value(), kPhi, 1e-12);
  EXPECT_NEAR(pent.p().value(), (5 - std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_FALSE(pent.is_exact());
}

TEST(Params, DomainErrors) {
  EXPECT_THROW(CodeParameters::real(0.0, 0.5), ParameterDomainError);
  EXPECT_THROW(CodeParameters::real(1.5, 0.0), ParameterDomainError);
  EXPECT_THROW(CodeParameters::real(0.5, -1.5), ParameterDomainError);
  EXPECT_FALSE(CodeParameters::real(0.5, 0.0).has_p());
  EXPECT_THROW(CodeParameters::real(0.5, 0.0).p(), ParameterDomainError);
  EXPECT_THROW(CodeParameters::pentagon().use_exact(Backend::exact), ParameterDomainError);
}

TEST(Params, MixedExactnessFallsBackToFloat) {
  const CodeParameters p(Scalar(Rational(1, 2)), Scalar(-0.25));
  EXPECT_FALSE(p.is_exact());
  EXPECT_FALSE(p.mu().is_exact());
}

TEST(VerifyCode, Examples) {
  EXPECT_TRUE(verify_code(square()).valid);
  const auto pent = verify_code(pentagon());
  EXPECT_TRUE(pent.valid);
  EXPECT_TRUE(pent.alpha_occurs);
  EXPECT_TRUE(pent.beta_occurs);

  const auto bad = verify_code(square(0.0, -0.5));
  EXPECT_FALSE(bad.valid);
  ASSERT_EQ(bad.pair_violations.size(), 2U);
  EXPECT_EQ(bad.pair_violations[0].i, 0);
  EXPECT_EQ(bad.pair_violations[0].j, 2);
  EXPECT_EQ(bad.pair_violations[1].i, 1);
  EXPECT_EQ(bad.pair_violations[1].j, 3);
}

TEST(VerifyCode, NormAndDimensionErrors) {
  SphericalCode c = square();
  c.vectors[1] = {0, 2};
  const auto r = verify_code(c);
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.norm_violations.size(), 1U);
  EXPECT_EQ(r.norm_violations[0].i, 1);
  c.vectors[1] = {0, 1, 0};
  EXPECT_THROW(verify_code(c), DimensionMismatchError);
}

TEST(VerifyCode, OneDistanceCodesAreAccepted) {
  const SphericalCode basis{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, CodeParameters::real(0.0, -1.0)};
  const auto r = verify_code(basis);
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.alpha_occurs);
  EXPECT_FALSE(r.beta_occurs);
}

TEST(ExtractGraphs, Examples) {
  EXPECT_TRUE(same_labeled(alpha_graph(square()), cycle_graph(4)));
  EXPECT_TRUE(same_labeled(beta_graph(square()), Graph::from_edges(4, {{0, 2}, {1, 3}})));
  EXPECT_TRUE(same_labeled(alpha_graph(pentagon()), cycle_graph(5)));
  const SphericalCode basis{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, CodeParameters::real(0.0, -1.0)};
  EXPECT_TRUE(same_labeled(alpha_graph(basis), complete_graph(3)));
  EXPECT_EQ(beta_graph(basis).edge_count(), 0);
}

TEST(ExtractGraphs, CloseParametersAreAmbiguous) {
  const SphericalCode c{1, {{1}}, CodeParameters::real(0.0, -1e-10)};
  EXPECT_THROW(alpha_graph(c), AmbiguousPairError);
  EXPECT_THROW(alpha_graph(square(0.0, -0.5)), InvalidCodeError);
}

TEST(CodeRank, Examples) {
  EXPECT_EQ(code_rank(square()), 2);
  EXPECT_EQ(code_rank(pentagon()), 2);
  const SphericalCode simplex{2, {unit(0), unit(2 * std::numbers::pi / 3), unit(4 * std::numbers::pi / 3)}, CodeParameters::real(0.0, -0.5)};
  EXPECT_EQ(code_rank(simplex), 2);
}

TEST(CertifyAlpha, FourCycleSquare) {
  const AlphaCertificate c = certify_alpha(cycle_graph(4), q(0, 1, -1, 1));
  EXPECT_TRUE(c.valid);
  EXPECT_TRUE(c.exact);
  EXPECT_TRUE(c.equality_case);
  EXPECT_EQ(c.shifted_rank, 3);
  EXPECT_EQ(c.rank_r, 2);
  EXPECT_EQ(ex(*c.quadform), Rational(1));
  EXPECT_NEAR(c.smallest_eigenvalue, -2, 1e-12);

  const AlphaCertificate f = certify_alpha(cycle_graph(4), CodeParameters::real(0, -1));
  EXPECT_TRUE(f.valid);
  EXPECT_FALSE(f.exact);
  EXPECT_EQ(f.rank_r, 2);
  EXPECT_NEAR(f.quadform_value(), 1.0, 1e-12);
}

TEST(CertifyAlpha, Pentagon) {
  const AlphaCertificate c = certify_alpha(cycle_graph(5), CodeParameters::pentagon());
  EXPECT_TRUE(c.valid);
  EXPECT_TRUE(c.equality_case);
  EXPECT_EQ(c.rank_r, 2);
  EXPECT_NEAR(c.quadform_value(), 5 / (2 + kPhi), 1e-9);
  EXPECT_NEAR(c.quadform_value(), (5 - std::sqrt(5.0)) / 2, 1e-9);
  EXPECT_NEAR(c.smallest_eigenvalue, -kPhi, 1e-9);
}

TEST(CertifyAlpha, SmallCompleteGraphs) {
  const AlphaCertificate k2 = certify_alpha(complete_graph(2), q(0, 1, -1, 1));
  EXPECT_TRUE(k2.valid);
  EXPECT_FALSE(k2.equality_case);
  EXPECT_EQ(ex(*k2.quadform), Rational(2, 3));
  EXPECT_EQ(k2.rank_r, 2);

  const AlphaCertificate k3 = certify_alpha(complete_graph(3), q(0, 1, -1, 1));
  EXPECT_TRUE(k3.valid);
  EXPECT_EQ(ex(*k3.quadform), Rational(3, 4));
  EXPECT_EQ(k3.rank_r, 3);

  // mu = 3, A + 3I = J + 2I, so q = 3/5 < p = 1.
  const AlphaCertificate k3h = certify_alpha(complete_graph(3), q(0, 1, -1, 2));
  EXPECT_TRUE(k3h.valid);
  EXPECT_EQ(ex(*k3h.quadform), Rational(3, 5));
  EXPECT_EQ(k3h.rank_r, 3);
}

TEST(CertifyAlpha, FailureReasons) {
  // mu = 5/3 < sqrt(3) = -lambda_min(K_{1,3}).
  const AlphaCertificate below = certify_alpha(complete_bipartite(1, 3), q(1, 2, -1, 4));
  EXPECT_FALSE(below.valid);
  EXPECT_EQ(below.failure_reason, AlphaFailure::eigenvalue_below);

  // At (0,-1) the star K_{1,3} is PSD-shifted with j in range but q > 1.
  const Graph star = complete_bipartite(1, 3);
  const AlphaCertificate big = certify_alpha(star, q(0, 1, -1, 1));
  ASSERT_FALSE(big.valid);
  EXPECT_EQ(big.failure_reason, AlphaFailure::quadform_exceeds);
  const oracle::QMat m = [&] {
    oracle::QMat a = oracle::adjacency(star);
    for (std::size_t i = 0; i < a.size(); ++i) a[i][i] += 2;
    return a;
  }();
  const auto x = oracle::solve(m, oracle::QVec(4, 1));
  ASSERT_TRUE(x);
  Rational qv = 0;
  for (const auto& xi : *x) qv += xi;
  EXPECT_EQ(ex(*big.quadform), qv);
  EXPECT_GT(qv, 1);

  // K_{1,4} has eigenvalue -2 with eigenvector (2,-1,-1,-1,-1), not orthogonal to j.
  const AlphaCertificate out = certify_alpha(complete_bipartite(1, 4), q(0, 1, -1, 1));
  EXPECT_FALSE(out.valid);
  EXPECT_EQ(out.failure_reason, AlphaFailure::j_not_in_range);
}

TEST(CertifyAlpha, DomainErrors) {
  EXPECT_THROW(certify_alpha(cycle_graph(4), q(1, 2, 0, 1)), ParameterDomainError);
  EXPECT_THROW(certify_alpha(Graph(0), q(0, 1, -1, 1)), EmptySubsetError);
}

TEST(CertifyAlpha, QuadformMatchesGaussianOracle) {
  for (const Graph& g : canonical_graphs_up_to(6))
    for (const CodeParameters& params : rational_grid()) {
      const AlphaCertificate c = certify_alpha(g, params);
      oracle::QMat m = oracle::adjacency(g);
      for (std::size_t i = 0; i < m.size(); ++i) m[i][i] += ex(params.mu());
      const auto x = oracle::solve(m, oracle::QVec(m.size(), 1));
      if (c.failure_reason == AlphaFailure::eigenvalue_below) continue;
      ASSERT_EQ(x.has_value(), c.quadform.has_value()) << emit_graph6(g) << " " << params.describe();
      if (!x) continue;
      Rational qv = 0;
      for (const auto& xi : *x) qv += xi;
      ASSERT_EQ(ex(*c.quadform), qv);
      ASSERT_EQ(c.shifted_rank, oracle::rank(m));
    }
}

TEST(CertifyAlpha, AgreesWithGramMinorsOracle) {
  // A code with these inner products exists iff its Gram matrix is PSD, and
  // the code rank is the Gram rank.
  int valid = 0;
  for (const Graph& g : canonical_graphs_up_to(5))
    for (const CodeParameters& params : rational_grid()) {
      const AlphaCertificate c = certify_alpha(g, params);
      const oracle::QMat gram = gram_oracle(g, ex(params.alpha()), ex(params.beta()));
      ASSERT_EQ(c.valid, oracle::psd_by_minors(gram)) << emit_graph6(g) << " " << params.describe();
      if (c.valid) {
        ASSERT_EQ(c.rank_r, oracle::rank(gram)) << emit_graph6(g) << " " << params.describe();
        ++valid;
      }
    }
  EXPECT_GT(valid, 100);
}

TEST(CertifyAlpha, AgreesWithGramInertiaOracleUpToSeven) {
  for (const Graph& g : canonical_graphs(7))
    for (const CodeParameters& params : rational_grid()) {
      const AlphaCertificate c = certify_alpha(g, params);
      const auto in = oracle::inertia(gram_oracle(g, ex(params.alpha()), ex(params.beta())));
      ASSERT_EQ(c.valid, in.neg == 0) << emit_graph6(g) << " " << params.describe();
      if (c.valid) { ASSERT_EQ(c.rank_r, in.pos); }
    }
}

TEST(CertifyAlpha, ExactAndFloatAgreeOnGrid) {
  for (const Graph& g : canonical_graphs_up_to(6))
    for (const CodeParameters& params : rational_grid()) {
      const AlphaCertificate e = certify_alpha(g, params, kDefaultTolerance, Backend::exact);
      const AlphaCertificate f = certify_alpha(g, params, kDefaultTolerance, Backend::floating);
      ASSERT_TRUE(e.exact);
      ASSERT_FALSE(f.exact);
      ASSERT_FALSE(f.ambiguous) << emit_graph6(g);
      ASSERT_EQ(e.valid, f.valid) << emit_graph6(g) << " " << params.describe();
      ASSERT_EQ(e.failure_reason, f.failure_reason);
      ASSERT_EQ(e.rank_r, f.rank_r);
      ASSERT_EQ(e.equality_case, f.equality_case);
      if (e.quadform) { ASSERT_NEAR(e.quadform->value(), f.quadform_value(), 1e-9); }
    }
}

TEST(CertifyAlpha, RankBookkeeping) {
  for (const Graph& g : canonical_graphs_up_to(6))
    for (const CodeParameters& params : rational_grid()) {
      const AlphaCertificate c = certify_alpha(g, params);
      if (!c.valid) continue;
      ASSERT_EQ(c.shifted_rank, c.rank_r + (c.equality_case ? 1 : 0));
      ASSERT_GE(c.smallest_eigenvalue, -params.mu().value() - 1e-9);
      ASSERT_LE(c.quadform_value(), params.p().value() + 1e-9);
    }
}

TEST(MainEigenvalue, KernelOrthogonalToOnesIffInRange) {
  int tight = 0;
  for (const Graph& g : canonical_graphs_up_to(7)) {
    const Spectrum s = eigen_decompose(adjacency_matrix(g));
    const double mu = -s.smallest();
    const ShiftAnalysis a = analyze_shift(g, s, mu, 1, kDefaultTolerance);
    bool orthogonal = true;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (std::abs(s.values[k] + mu) <= 1e-8 && std::abs(dot(s.vectors[k], ones(s.size()))) > 1e-8) orthogonal = false;
    ASSERT_EQ(a.j_in_range, orthogonal) << emit_graph6(g);
    tight += orthogonal;
  }
  EXPECT_GT(tight, 0);
}

TEST(Realize, SquareFromFourCycle) {
  const SphericalCode code = realize_from_alpha(cycle_graph(4), q(0, 1, -1, 1));
  EXPECT_EQ(code.dim, 2);
  EXPECT_TRUE(verify_code(code).valid);
  EXPECT_LE(max_abs_diff(gram_matrix(code.vectors), gram_matrix(square().vectors)), 1e-9);
  EXPECT_TRUE(same_labeled(alpha_graph(code), cycle_graph(4)));
}

TEST(Realize, PentagonFromFiveCycle) {
  const SphericalCode code = realize_from_alpha(cycle_graph(5), CodeParameters::pentagon());
  EXPECT_EQ(code.dim, 2);
  EXPECT_LE(max_abs_diff(gram_matrix(code.vectors), gram_matrix(pentagon().vectors)), 1e-9);
}

TEST(Realize, TriangleGivesOrthonormalTriple) {
  const SphericalCode code = realize_from_alpha(complete_graph(3), q(0, 1, -1, 1));
  EXPECT_EQ(code.dim, 3);
  EXPECT_LE(max_abs_diff(gram_matrix(code.vectors), SymmetricMatrix::identity(3)), 1e-9);
}

TEST(Realize, PaddingAndErrors) {
  const SphericalCode padded = realize_from_alpha(cycle_graph(4), q(0, 1, -1, 1), kDefaultTolerance, Backend::automatic, 4);
  EXPECT_EQ(padded.dim, 4);
  for (const auto& v : padded.vectors) {
    ASSERT_EQ(v.size(), 4U);
    EXPECT_EQ(v[2], 0.0);
    EXPECT_EQ(v[3], 0.0);
  }
  EXPECT_THROW(realize_from_alpha(cycle_graph(4), q(0, 1, -1, 1), kDefaultTolerance, Backend::automatic, 1), DimensionMismatchError);
  EXPECT_THROW(realize_from_alpha(complete_bipartite(1, 4), q(0, 1, -1, 1)), CertificateInvalidError);
}

TEST(Realize, OutputIsReproducible) {
  const auto a = realize_from_alpha(cycle_graph(5), CodeParameters::pentagon());
  const auto b = realize_from_alpha(cycle_graph(5), CodeParameters::pentagon());
  EXPECT_EQ(a.vectors, b.vectors);
}

TEST(CertifyBetaZero, Examples) {
  const Graph two_k2 = Graph::from_edges(4, {{0, 2}, {1, 3}});
  const BetaCertificate sq = certify_beta_zero(two_k2, q(0, 1, -1, 1));
  EXPECT_TRUE(sq.valid);
  EXPECT_EQ(sq.which, BetaCase::p2);
  EXPECT_EQ(sq.rank_r, 2);

  const BetaCertificate basis = certify_beta_zero(Graph(3), -1.0);
  EXPECT_TRUE(basis.valid);
  EXPECT_EQ(basis.which, BetaCase::p1);
  EXPECT_EQ(basis.rank_r, 3);

  const BetaCertificate k2 = certify_beta_zero(complete_graph(2), -0.9);
  EXPECT_TRUE(k2.valid);
  EXPECT_EQ(k2.which, BetaCase::p1);
  EXPECT_EQ(k2.rank_r, 2);

  const BetaCertificate k3 = certify_beta_zero(complete_graph(3), -1.0);
  EXPECT_FALSE(k3.valid);
  EXPECT_EQ(k3.failure_reason, BetaFailure::eigenvalue_above);

  EXPECT_THROW(certify_beta_zero(Graph(2), 0.5), ParameterDomainError);
  EXPECT_THROW(certify_beta_zero(Graph(2), q(1, 2, -1, 2)), ParameterDomainError);
}

TEST(CertifyBeta, Examples) {
  const double a = 1 / std::sqrt(2.0);
  const BetaCertificate three = certify_beta(Graph::from_edges(3, {{0, 1}}), CodeParameters::real(a, 0.0));
  EXPECT_TRUE(three.valid);
  EXPECT_EQ(three.which, BetaCase::three);
  EXPECT_TRUE(three.equality_case);
  EXPECT_NEAR(three.quadform->value(), -1.0, 1e-9);
  EXPECT_EQ(three.rank_r, 2);

  const BetaCertificate one = certify_beta(Graph(3), q(1, 2, 0, 1));
  EXPECT_TRUE(one.valid);
  EXPECT_EQ(one.which, BetaCase::one);
  EXPECT_EQ(one.rank_r, 3);

  const BetaCertificate strict = certify_beta(complete_graph(2), q(1, 2, -1, 2));
  EXPECT_TRUE(strict.valid);
  EXPECT_EQ(strict.which, BetaCase::three);
  EXPECT_FALSE(strict.equality_case);
  EXPECT_EQ(ex(*strict.quadform), Rational(-4));
  EXPECT_EQ(strict.rank_r, 2);
}

TEST(CertifyBeta, CaseTwoAndFailures) {
  // lambda = 1 at (1/3,-1/3); K2 has lambda_1 = 1: case two, rank = rank(I - A) + 1 = 2.
  const BetaCertificate two = certify_beta(complete_graph(2), q(1, 3, -1, 3));
  EXPECT_TRUE(two.valid);
  EXPECT_EQ(two.which, BetaCase::two);
  EXPECT_EQ(two.rank_r, 2);

  // K4 at (1/2,-1/2): lambda = 1/2, spectrum {3,-1,-1,-1}: one negative, j in range,
  // q = 4/(1/2 - 3) = -8/5 > -2: exceeds.
  const BetaCertificate k4 = certify_beta(complete_graph(4), q(1, 2, -1, 2));
  EXPECT_FALSE(k4.valid);
  EXPECT_EQ(k4.failure_reason, BetaFailure::quadform_exceeds);
  EXPECT_EQ(ex(*k4.quadform), Rational(-8, 5));

  // 2K2 at (1/2,-1/2): eigenvalue 1 twice above lambda = 1/2.
  const BetaCertificate many = certify_beta(Graph::from_edges(4, {{0, 1}, {2, 3}}), q(1, 2, -1, 2));
  EXPECT_FALSE(many.valid);
  EXPECT_EQ(many.failure_reason, BetaFailure::negative_inertia);

  EXPECT_THROW(certify_beta(complete_graph(2), q(0, 1, -1, 1)), ParameterDomainError);
}

TEST(CertifyBeta, AgreesWithGramInertiaOracle) {
  for (const Graph& g : canonical_graphs_up_to(7)) {
    if (g.order() == 7 && g.edge_count() % 3 != 0) continue;  // keep the order-7 sample moderate
    for (const CodeParameters& params : rational_beta_grid()) {
      const BetaCertificate c = certify_beta(g, params);
      const auto in = oracle::inertia(gram_oracle(g, ex(params.beta()), ex(params.alpha())));
      ASSERT_EQ(c.valid, in.neg == 0) << emit_graph6(g) << " " << params.describe();
      if (c.valid) { ASSERT_EQ(c.rank_r, in.pos) << emit_graph6(g) << " " << params.describe(); }
    }
  }
}

TEST(CertifyBetaZero, AgreesWithGramInertiaOracle) {
  for (const Graph& g : canonical_graphs_up_to(6))
    for (const Rational& beta : {Rational(-1), Rational(-3, 4), Rational(-1, 2), Rational(-1, 4)}) {
      const CodeParameters params = CodeParameters::exact(Rational(0), beta);
      const BetaCertificate c = certify_beta_zero(g, params);
      const auto in = oracle::inertia(gram_oracle(g, beta, Rational(0)));
      ASSERT_EQ(c.valid, in.neg == 0) << emit_graph6(g);
      if (c.valid) { ASSERT_EQ(c.rank_r, in.pos) << emit_graph6(g); }
    }
}

TEST(RealizeBeta, Examples) {
  const Graph two_k2 = Graph::from_edges(4, {{0, 2}, {1, 3}});
  const SphericalCode sq = realize_from_beta(two_k2, q(0, 1, -1, 1));
  EXPECT_EQ(sq.dim, 2);
  EXPECT_LE(max_abs_diff(gram_matrix(sq.vectors), gram_matrix(square().vectors)), 1e-9);

  const double a = 1 / std::sqrt(2.0);
  const SphericalCode three = realize_from_beta(Graph::from_edges(3, {{0, 1}}), CodeParameters::real(a, 0.0));
  EXPECT_EQ(three.dim, 2);
  const std::vector<Vector> ref{{1, 0}, {0, 1}, {a, a}};
  EXPECT_LE(max_abs_diff(gram_matrix(three.vectors), gram_matrix(ref)), 1e-9);

  const SphericalCode sixty = realize_from_beta(Graph(3), q(1, 2, 0, 1));
  EXPECT_EQ(sixty.dim, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) EXPECT_NEAR(dot(sixty.vectors[static_cast<std::size_t>(i)], sixty.vectors[static_cast<std::size_t>(j)]), 0.5, 1e-9);
}

TEST(RoundTrip, AlphaRouteOverGrid) {
  int realized = 0;
  for (const Graph& g : canonical_graphs_up_to(7))
    for (const CodeParameters& params : rational_grid()) {
      const AlphaCertificate c = certify_alpha(g, params);
      if (!c.valid) continue;
      const SphericalCode code = realize_from_alpha(g, params);
      ASSERT_TRUE(same_labeled(alpha_graph(code, 1e-8), g)) << emit_graph6(g) << " " << params.describe();
      ASSERT_EQ(code_rank(code, 1e-8), c.rank_r);
      ASSERT_LE(gram_residual(code, alpha_gram(g, params)), 1e-8);
      ASSERT_TRUE(same_labeled(beta_graph(code, 1e-8), g.complement()));
      ++realized;
    }
  EXPECT_GT(realized, 1000);
}

TEST(RoundTrip, BetaRouteOverGrid) {
  int realized = 0;
  for (const Graph& g : canonical_graphs_up_to(7))
    for (const CodeParameters& params : rational_beta_grid()) {
      const BetaCertificate c = certify_beta(g, params);
      if (!c.valid) continue;
      const SphericalCode code = realize_from_beta(g, params);
      ASSERT_TRUE(same_labeled(beta_graph(code, 1e-8), g)) << emit_graph6(g) << " " << params.describe();
      ASSERT_EQ(code_rank(code, 1e-8), c.rank_r);
      ASSERT_TRUE(same_labeled(alpha_graph(code, 1e-8), g.complement()));
      ++realized;
    }
  EXPECT_GT(realized, 100);
}

TEST(RoundTrip, RoutesAgreeOnComplements) {
  for (const Graph& g : canonical_graphs_up_to(6))
    for (const CodeParameters& params : rational_beta_grid()) {
      const AlphaCertificate a = certify_alpha(g.complement(), params);
      const BetaCertificate b = certify_beta(g, params);
      ASSERT_EQ(a.valid, b.valid) << emit_graph6(g) << " " << params.describe();
      if (a.valid) { ASSERT_EQ(a.rank_r, b.rank_r); }
    }
}

TEST(CodeJson, RoundTripPreservesVectorsAndExactParameters) {
  const SphericalCode code = realize_from_alpha(cycle_graph(5), q(1, 4, -1, 2));
  const SphericalCode back = code_from_json(code_to_json(code));
  EXPECT_EQ(back.dim, code.dim);
  EXPECT_EQ(back.vectors, code.vectors);
  ASSERT_TRUE(back.params.is_exact());
  EXPECT_EQ(ex(back.params.alpha()), Rational(1, 4));
  EXPECT_EQ(ex(back.params.beta()), Rational(-1, 2));

  const SphericalCode fl = realize_from_alpha(cycle_graph(5), CodeParameters::pentagon());
  const SphericalCode fb = code_from_json(code_to_json(fl));
  EXPECT_EQ(fb.vectors, fl.vectors);
  EXPECT_EQ(fb.params.alpha().value(), fl.params.alpha().value());
  EXPECT_FALSE(fb.params.is_exact());
}

TEST(CodeJson, ReaderAcceptsStringsAndExtraFields) {
  const SphericalCode c = code_from_json(R"({"alpha": "0", "beta": "-1", "dim": 2, "note": "x",
      "vectors": [[1, 0], [0, 1], [-1, 0], [0, -1]]})");
  EXPECT_TRUE(c.params.is_exact());
  EXPECT_TRUE(same_labeled(alpha_graph(c), cycle_graph(4)));
  EXPECT_THROW(code_from_json(R"({"beta": -1, "dim": 1, "vectors": [[1]]})"), InvalidCodeError);
  EXPECT_THROW(code_from_json(R"({"alpha": 0, "beta": -1, "dim": 2, "vectors": [[1]]})"), DimensionMismatchError);
}
