#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cutcone/cut_algebra.hpp"
#include "cutcone/graph.hpp"
#include "cutcone/metric.hpp"
#include "cutcone/rational.hpp"

namespace testing_support {

using cutcone::Cut;
using cutcone::Metric;
using cutcone::Rational;
using cutcone::RationalVector;
using cutcone::SimpleGraph;
using Rng = std::mt19937_64;

inline Metric metric_from_ints(std::size_t n, const std::vector<long>& values) {
  RationalVector d;
  for (long v : values) d.emplace_back(v);
  return Metric(n, std::move(d));
}

/// The seven-vertex graph used as the running SIG example.
inline SimpleGraph seven_vertex_graph() {
  return SimpleGraph(7, {{1, 2}, {1, 4}, {1, 5}, {1, 7}, {2, 3}, {3, 4}, {5, 6}, {6, 7}});
}

inline Rational random_rational(Rng& rng, long num_max, long den_max) {
  std::uniform_int_distribution<long> num(0, num_max), den(1, den_max);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_positive_rational(Rng& rng, long num_max, long den_max) {
  std::uniform_int_distribution<long> num(1, num_max), den(1, den_max);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// l1 distances of random rational points; always in the cut cone.
inline Metric random_l1_metric(std::size_t n, Rng& rng, std::size_t dim = 3) {
  std::vector<RationalVector> pts(n, RationalVector(dim));
  for (auto& p : pts)
    for (auto& x : p) x = random_rational(rng, 12, 4);
  Metric d = Metric::zero(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < dim; ++k) s += abs(pts[i - 1][k] - pts[j - 1][k]);
      d.set(i, j, s);
    }
  return d;
}

/// Nonnegative combination of `terms` random nontrivial cut metrics.
inline Metric random_cut_combination(std::size_t n, Rng& rng, std::size_t terms, bool pairs_only = false) {
  Metric d = Metric::zero(n);
  std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << n) - 2);
  std::uniform_int_distribution<std::size_t> vertex(1, n);
  for (std::size_t t = 0; t < terms; ++t) {
    Cut c(n, 0);
    if (pairs_only) {
      std::size_t i = vertex(rng), j = vertex(rng);
      while (j == i) j = vertex(rng);
      c = Cut::from_members(n, {i, j});
    } else {
      c = Cut(n, mask(rng));
    }
    Rational w = random_positive_rational(rng, 9, 4);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        if (c.separates(i, j)) d.set(i, j, d(i, j) + w);
  }
  return d;
}

/// Random positive rationals closed under shortest paths: a semi-metric
/// that is usually far from any cut combination.
inline Metric random_repaired_metric(std::size_t n, Rng& rng) {
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) a[i][j] = a[j][i] = random_positive_rational(rng, 20, 3);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (i != j && i != k && j != k && a[i][k] + a[k][j] < a[i][j]) a[i][j] = a[i][k] + a[k][j];
  Metric d = Metric::zero(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) d.set(i, j, a[i][j]);
  return d;
}

/// Mixed generator used for verdict-agreement tests: pair-cut combinations
/// (members), l1 metrics and repaired random metrics (mostly non-members).
inline Metric random_mixed_metric(std::size_t n, Rng& rng, std::size_t k) {
  switch (k % 3) {
    case 0:
      return random_cut_combination(n, rng, 2 * n, true);
    case 1:
      return random_l1_metric(n, rng);
    default:
      return random_repaired_metric(n, rng);
  }
}

}  // namespace testing_support
