#include <gtest/gtest.h>

#include "cutcone/certificate.hpp"
#include "cutcone/embeddings.hpp"
#include "cutcone/oracle.hpp"
#include "cutcone/sig.hpp"
#include "support.hpp"

using namespace cutcone;
using namespace testing_support;

namespace {

CutCertificate certificate(std::size_t n, const std::vector<std::vector<std::size_t>>& members, const Rational& w) {
  CutCertificate cert{n, {}, {}};
  for (const auto& m : members) cert.add(Cut::from_members(n, m), w);
  return cert;
}

// Chebyshev distance computed directly on the coordinates.
Rational chebyshev(const RationalVector& x, const RationalVector& y) {
  Rational best = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    Rational diff = x[k] > y[k] ? Rational(x[k] - y[k]) : Rational(y[k] - x[k]);
    if (diff > best) best = diff;
  }
  return best;
}

}  // namespace

TEST(L1Embedding, SingleCut) {
  PointSet pts = l1_embedding(certificate(3, {{1}}, 1));
  EXPECT_EQ(pts.norm, Norm::l1);
  ASSERT_EQ(pts.dimension(), 1u);
  EXPECT_EQ(pts.points[0], RationalVector{1});
  EXPECT_EQ(pts.points[1], RationalVector{0});
  EXPECT_EQ(pts.points[2], RationalVector{0});
  EXPECT_EQ(pts.induced_metric().values(), (RationalVector{1, 1, 0}));
}

TEST(L1Embedding, LinearGraphDecomposition) {
  CutCertificate cert = certificate(5, {{1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5}}, Rational(1, 2));
  PointSet pts = l1_embedding(cert);
  EXPECT_EQ(pts.n(), 5u);
  EXPECT_EQ(pts.dimension(), 6u);
  EXPECT_TRUE(verify_isometry(pts, truncated_metric(families::linear(5))).isometric());
}

TEST(L1Embedding, CompleteGraphHalfSingletons) {
  PointSet pts = l1_embedding(certificate(5, {{1}, {2}, {3}, {4}, {5}}, Rational(1, 2)));
  ASSERT_EQ(pts.dimension(), 5u);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(pts.points[i][k], i == k ? Rational(1, 2) : Rational(0));
  Metric induced = pts.induced_metric();
  for (const auto& v : induced.values()) EXPECT_EQ(v, 1);
  EXPECT_TRUE(verify_isometry(pts, graph_metric(families::complete(5))).isometric());
}

TEST(L1Embedding, ZeroWeightsDropped) {
  CutCertificate cert = certificate(4, {{1}, {2}}, 1);
  cert.add(Cut::from_members(4, {3}), 0);
  EXPECT_EQ(l1_embedding(cert).dimension(), 2u);
}

TEST(L1Embedding, RejectsInvalidCertificate) {
  CutCertificate negative = certificate(4, {{1}, {2}}, 1);
  negative.weights[1] = -1;
  EXPECT_THROW(l1_embedding(negative), std::invalid_argument);
  CutCertificate trivial{4, {Cut(4, 0)}, {Rational(1)}};
  EXPECT_THROW(l1_embedding(trivial), std::invalid_argument);
}

TEST(VerifyIsometry, PerturbationIsReported) {
  CutCertificate cert = certificate(5, {{1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5}}, Rational(1, 2));
  PointSet pts = l1_embedding(cert);
  pts.points[2][0] += 1;
  IsometryReport r = verify_isometry(pts, cert.reconstruct());
  ASSERT_FALSE(r.isometric());
  for (const auto& m : r.mismatches) {
    EXPECT_TRUE(m.i == 3 || m.j == 3);
    EXPECT_EQ(m.actual, m.expected + 1);
  }
}

TEST(VerifyIsometry, SizeMismatchThrows) {
  PointSet pts = l1_embedding(certificate(3, {{1}}, 1));
  EXPECT_THROW(verify_isometry(pts, graph_metric(families::complete(4))), std::invalid_argument);
}

TEST(VerifyIsometry, OracleWitnessEmbeds) {
  Rng rng(61);
  for (std::size_t n = 4; n <= 7; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      Metric d = trial % 2 ? random_l1_metric(n, rng) : random_cut_combination(n, rng, n);
      FeasibilityResult r = cutcone_membership(d);
      ASSERT_TRUE(r.feasible());
      PointSet pts = l1_embedding(certificate_from_witness(n, *r.witness));
      EXPECT_TRUE(verify_isometry(pts, d).isometric());
    }
}

TEST(LinfSigEmbedding, CompleteGraphThree) {
  PointSet pts = linf_sig_embedding(families::complete(3));
  EXPECT_EQ(pts.norm, Norm::linf);
  ASSERT_EQ(pts.dimension(), 2u);
  EXPECT_EQ(pts.points[0], (RationalVector{2, 1}));
  EXPECT_EQ(pts.points[1], (RationalVector{1, 2}));
  EXPECT_EQ(pts.points[2], (RationalVector{1, 1}));
}

TEST(LinfSigEmbedding, StarGraph) {
  SimpleGraph s = families::star(3);
  PointSet pts = linf_sig_embedding(s);
  EXPECT_EQ(pts.n(), 4u);
  EXPECT_EQ(pts.dimension(), 3u);
  EXPECT_EQ(sig_graph(pts.induced_metric()), s);
}

TEST(LinfSigEmbedding, SevenVertexGraph) {
  SimpleGraph g = seven_vertex_graph();
  PointSet pts = linf_sig_embedding(g);
  Metric d = pts.induced_metric();
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = i + 1; j <= 7; ++j) EXPECT_EQ(d(i, j), chebyshev(pts.points[i - 1], pts.points[j - 1]));
  EXPECT_TRUE(verify_isometry(pts, d).isometric());
  EXPECT_EQ(sig_graph(d), g);
  EXPECT_TRUE(verify_sig_metric(d, g).pass());
}

TEST(LinfSigEmbedding, RejectsDisconnectedAndTiny) {
  EXPECT_THROW(linf_sig_embedding(SimpleGraph(4, {{1, 2}, {3, 4}})), std::invalid_argument);
  EXPECT_THROW(linf_sig_embedding(SimpleGraph(1)), std::invalid_argument);
}

TEST(LinfSigEmbedding, RandomConnectedGraphs) {
  Rng rng(2024);
  std::uniform_int_distribution<std::size_t> size(2, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    SimpleGraph g = families::random_connected(size(rng), density(rng), rng);
    PointSet pts = linf_sig_embedding(g);
    ASSERT_EQ(pts.dimension(), g.n() - 1);
    for (const auto& p : pts.points)
      for (const auto& x : p) EXPECT_TRUE(x == 0 || x == 1 || x == 2);
    Metric d = pts.induced_metric();
    for (std::size_t i = 1; i <= g.n(); ++i)
      for (std::size_t j = i + 1; j <= g.n(); ++j) EXPECT_EQ(d(i, j), chebyshev(pts.points[i - 1], pts.points[j - 1]));
    EXPECT_EQ(sig_graph(d), g) << "trial " << trial;
  }
}
