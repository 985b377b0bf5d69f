#include <gtest/gtest.h>

#include <algorithm>
#include <tuple>

#include "cutcone/certificate.hpp"
#include "cutcone/fullcut.hpp"
#include "cutcone/matrix.hpp"
#include "cutcone/oracle.hpp"
#include "cutcone/sig.hpp"
#include "support.hpp"

using namespace cutcone;
using namespace testing_support;

namespace {

RationalVector ints(const std::vector<int>& v) {
  RationalVector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

RationalMatrix basis_matrix(const KernelBasis& b) {
  RationalMatrix m(b.vectors.size(), b.vectors.front().vector.length);
  for (std::size_t r = 0; r < b.vectors.size(); ++r)
    for (auto [k, x] : b.vectors[r].vector.entries) m(r, k) = x;
  return m;
}

}  // namespace

TEST(CandidateSolution, CompleteGraphSingleton) {
  Metric d = graph_metric(families::complete(5));
  RationalVector w = candidate_solution(d);
  EXPECT_EQ(w[0], Rational(1, 22));
  EXPECT_EQ(full_cut_matrix(5) * w, d.values());
}

TEST(CandidateSolution, ZeroMetric) {
  for (const auto& x : candidate_solution(Metric::zero(5))) EXPECT_EQ(x, 0);
}

TEST(CandidateSolution, RightInverseAndLinearity) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 5;
    Metric a = random_repaired_metric(n, rng), b = random_l1_metric(n, rng);
    RationalVector wa = candidate_solution(a), wb = candidate_solution(b);
    EXPECT_EQ(full_cut_matrix(n) * wa, a.values());
    EXPECT_EQ(right_inverse_full_cut_matrix(n) * a.values(), wa);
    Rational alpha = random_rational(rng, 9, 5), beta = random_rational(rng, 9, 5);
    RationalVector mix(a.size());
    for (std::size_t k = 0; k < mix.size(); ++k) mix[k] = alpha * a.values()[k] + beta * b.values()[k];
    RationalVector wm = candidate_solution(Metric(n, mix));
    for (std::size_t k = 0; k < wm.size(); ++k) EXPECT_EQ(wm[k], alpha * wa[k] + beta * wb[k]);
  }
}

TEST(SufficientCondition, CompleteGraphs) {
  for (std::size_t n = 5; n <= 8; ++n) {
    Metric d = graph_metric(families::complete(n));
    SufficientConditionResult r = sufficient_condition(d);
    EXPECT_EQ(r.verdict, SufficientVerdict::member);
    const Rational m1(static_cast<long>(pair_count(n) + 1));
    for (const auto& s : r.slacks) {
      const long c = static_cast<long>(s.cut.size());
      // s_C - |C|(n-|C|) m/(m+1) = |C|(n-|C|)/(m+1)
      EXPECT_EQ(s.slack, Rational(c * (static_cast<long>(n) - c)) / m1);
    }
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_TRUE(verify_cut_certificate(*r.certificate, d).valid);
    EXPECT_EQ(r.slacks.size(), (std::size_t{1} << (n - 1)) - 1);
  }
}

TEST(SufficientCondition, HypercubeIsInconclusive) {
  Metric d = truncated_metric(families::hypercube(3));
  SufficientConditionResult r = sufficient_condition(d);
  EXPECT_EQ(r.verdict, SufficientVerdict::inconclusive);
  EXPECT_FALSE(r.failing.empty());
  EXPECT_FALSE(r.certificate.has_value());
  EXPECT_FALSE(cutcone_membership(d).feasible());
}

TEST(SufficientCondition, ScaledCompleteGraph) {
  Metric d = graph_metric(families::complete(5));
  Rational lambda(7, 3);
  SufficientConditionResult a = sufficient_condition(d), b = sufficient_condition(d.scaled(lambda));
  EXPECT_EQ(b.verdict, SufficientVerdict::member);
  ASSERT_TRUE(a.certificate && b.certificate);
  ASSERT_EQ(a.certificate->weights.size(), b.certificate->weights.size());
  for (std::size_t k = 0; k < a.certificate->weights.size(); ++k)
    EXPECT_EQ(b.certificate->weights[k], lambda * a.certificate->weights[k]);
}

TEST(SufficientCondition, PassImpliesOracleMembership) {
  Rng rng(43);
  std::size_t passes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5 + trial % 2;
    Metric d = random_cut_combination(n, rng, 3 * n);
    SufficientConditionResult r = sufficient_condition(d);
    if (r.verdict != SufficientVerdict::member) continue;
    ++passes;
    EXPECT_TRUE(cutcone_membership(d).feasible());
    EXPECT_TRUE(verify_cut_certificate(*r.certificate, d).valid);
  }
  EXPECT_GT(passes, 0u);
}

TEST(KernelBasis, FourPointVectors) {
  KernelBasis b = kernel_basis(4);
  EXPECT_FALSE(b.normative);
  ASSERT_EQ(b.vectors.size(), 8u);
  EXPECT_EQ(b.vectors[0].label(), "phi_1");
  EXPECT_EQ(b.vectors[0].vector.dense(), ints({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1}));
  const std::vector<std::vector<int>> psi = {
      {-1, -1, -1, 0, 1, 1, 0, 1, 0, 0, -1, 0, 0, 0},    {-1, -1, 0, -1, 1, 0, 1, 0, 1, 0, 0, -1, 0, 0},
      {-1, 0, -1, -1, 0, 1, 1, 0, 0, 1, 0, 0, -1, 0},    {0, -1, -1, -1, 0, 0, 0, 1, 1, 1, 0, 0, 0, -1},
      {-1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1}};
  for (std::size_t t = 0; t < 5; ++t) EXPECT_EQ(b.vectors[3 + t].vector.dense(), ints(psi[t])) << t;
  EXPECT_EQ(b.vectors[3].label(), "psi_{1,2,3}");
  EXPECT_EQ(b.vectors[7].label(), "psi_{1,2,3,4}");
}

TEST(KernelBasis, DimensionAnnihilationAndRank) {
  for (std::size_t n = 4; n <= 8; ++n) {
    KernelBasis b = kernel_basis(n);
    const std::size_t dim = (std::size_t{1} << n) - 2 - pair_count(n);
    ASSERT_EQ(b.vectors.size(), dim);
    EXPECT_EQ(b.normative, n >= 5);
    CutIndex index(n);
    for (const auto& v : b.vectors)
      for (const auto& x : apply_full_cut_matrix(v.vector, index)) EXPECT_EQ(x, 0) << v.label();
    if (n <= 7) {
      EXPECT_EQ(rank(basis_matrix(b)), dim);
    }
  }
  EXPECT_EQ(kernel_basis(5).vectors.size(), 20u);
}

TEST(KernelBasis, DenseProductAgrees) {
  KernelBasis b = kernel_basis(5);
  RationalMatrix s = full_cut_matrix(5);
  for (const auto& v : b.vectors) EXPECT_EQ(s * v.vector.dense(), RationalVector(10));
}

TEST(KernelBasis, FullSetIsSignedCombinationOfProperSubsets) {
  for (std::size_t n : {5u, 6u}) {
    CutIndex index(n);
    RationalVector rhs(index.size());
    for (const Cut& t : index.cuts()) {
      RationalVector psi = alternating_sum_vector(t.mask(), index).dense();
      const int sign = (t.size() % 2) ? -1 : 1;
      for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += sign * psi[k];
    }
    const int outer = ((n - 1) % 2) ? -1 : 1;
    for (auto& x : rhs) x *= outer;
    EXPECT_EQ(alternating_sum_vector(Cut(n, 0).full_mask(), index).dense(), rhs);
  }
}

TEST(KernelBasis, SmallSubsetImages) {
  // psi_{i} maps to -delta_{i}; psi_{i,j} maps to -2 at {i,j} and 0 elsewhere.
  for (std::size_t n : {5u, 6u}) {
    CutIndex index(n);
    for (std::size_t i = 1; i <= n; ++i) {
      RationalVector img = apply_full_cut_matrix(alternating_sum_vector(std::uint64_t{1} << (i - 1), index), index);
      for (std::size_t k = 0; k < img.size(); ++k) {
        auto [p, q] = pair_at(k, n);
        EXPECT_EQ(img[k], (p == i || q == i) ? -1 : 0);
      }
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::uint64_t mask = (std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (j - 1));
        RationalVector img2 = apply_full_cut_matrix(alternating_sum_vector(mask, index), index);
        for (std::size_t k = 0; k < img2.size(); ++k) EXPECT_EQ(img2[k], k == pair_index(i, j, n) ? -2 : 0);
      }
    }
  }
}

TEST(KernelBasis, SkewVectorChoicesAreNotAllComplements) {
  // Counts of (n-1)-subsets of skew vectors that fail to complete the alternating family.
  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> expected = {{3, 3, 0}, {4, 35, 6}, {5, 1365, 425}};
  for (auto [n, total_expected, dependent_expected] : expected) {
    KernelBasis b = kernel_basis(n);
    CutIndex index(n);
    const std::size_t classes = index.size() / 2;
    const std::size_t dim = b.vectors.size();
    auto rank_of = [&](const std::vector<std::size_t>& choice) {
      RationalMatrix m(dim, index.size());
      std::size_t row = 0;
      for (std::size_t k = 0; k < classes; ++k)
        if (choice[k]) {
          for (auto [pos, x] : skew_vector(k + 1, n).entries) m(row, pos) = x;
          ++row;
        }
      for (const auto& v : b.vectors)
        if (v.family == KernelFamily::alternating) {
          for (auto [pos, x] : v.vector.entries) m(row, pos) = x;
          ++row;
        }
      return rank(m);
    };
    std::vector<std::size_t> choice(classes, 0);
    std::fill(choice.begin(), choice.begin() + (n - 1), 1);
    EXPECT_EQ(rank_of(choice), dim);
    std::size_t total = 0, dependent = 0;
    do {
      ++total;
      if (rank_of(choice) != dim) ++dependent;
    } while (std::prev_permutation(choice.begin(), choice.end()));
    EXPECT_EQ(total, total_expected);
    EXPECT_EQ(dependent, dependent_expected);
  }
  // {1}, {2}, {1,2} at n = 4.
  KernelBasis b = kernel_basis(4);
  RationalMatrix m(b.vectors.size(), 14);
  std::size_t row = 0;
  for (std::size_t k : {1u, 2u, 5u}) {
    for (auto [pos, x] : skew_vector(k, 4).entries) m(row, pos) = x;
    ++row;
  }
  for (const auto& v : b.vectors)
    if (v.family == KernelFamily::alternating) {
      for (auto [pos, x] : v.vector.entries) m(row, pos) = x;
      ++row;
    }
  EXPECT_LT(rank(m), b.vectors.size());
}

TEST(VerifyCutCertificate, KnownDecompositions) {
  const Rational half(1, 2);
  CutCertificate linear{5, {}, {}};
  for (auto members : std::vector<std::vector<std::size_t>>{{1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5}})
    linear.add(Cut::from_members(5, members), half);
  EXPECT_TRUE(verify_cut_certificate(linear, truncated_metric(families::linear(5))).valid);

  CutCertificate cp{6, {}, {}};
  for (std::uint64_t choice = 0; choice < 8; ++choice) {
    std::vector<std::size_t> members;
    for (std::size_t i = 1; i <= 3; ++i) members.push_back((choice >> (i - 1)) & 1 ? i + 3 : i);
    cp.add(Cut::from_members(6, members), Rational(1, 4));
  }
  EXPECT_TRUE(verify_cut_certificate(cp, truncated_metric(families::cocktail_party(3))).valid);

  CutCertificate bad = linear;
  bad.weights[2] = -bad.weights[2];
  CertificateReport r = verify_cut_certificate(bad, truncated_metric(families::linear(5)));
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.negative_weights, std::vector<std::size_t>{2});
  ASSERT_TRUE(r.first_mismatch.has_value());
}

TEST(VerifyCutCertificate, MalformedAndMismatch) {
  CutCertificate c{4, {}, {}};
  c.add(Cut(4, 0), 1);
  EXPECT_EQ(verify_cut_certificate(c, Metric::zero(4)).malformed_cuts, std::vector<std::size_t>{0});
  CutCertificate one{3, {}, {}};
  one.add(Cut::from_members(3, {1}), 1);
  CertificateReport r = verify_cut_certificate(one, Metric(3, {1, 1, 1}));
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.first_mismatch);
  EXPECT_EQ(r.first_mismatch->i, 2u);
  EXPECT_EQ(r.first_mismatch->j, 3u);
  EXPECT_EQ(r.first_mismatch->expected, 1);
  EXPECT_EQ(r.first_mismatch->actual, 0);
  EXPECT_FALSE(verify_cut_certificate(one, Metric::zero(4)).valid);
}
