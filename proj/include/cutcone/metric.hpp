#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutcone/rational.hpp"

namespace cutcone {

/// Number of unordered pairs of an n-element set.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Zero-based rank of the pair {i,j} (1 <= i < j <= n) in lexicographic order.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i < 1 || i >= j || j > n)
    throw std::out_of_range("pair_index: need 1 <= i < j <= n, got (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(n) + ")");
  return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

/// Inverse of pair_index: the 1-based pair at lexicographic rank k.
inline std::pair<std::size_t, std::size_t> pair_at(std::size_t k, std::size_t n) {
  if (k >= pair_count(n)) throw std::out_of_range("pair_at: index out of range");
  std::size_t i = 1;
  while (k >= n - i) {
    k -= n - i;
    ++i;
  }
  return {i, i + 1 + k};
}

/// Symmetric point function on V_n = {1..n}, stored as the n(n-1)/2 distances
/// in lexicographic pair order. Construction checks shape only; semantic
/// checks (sign, triangle inequality) live in validate_metric.
class Metric {
 public:
  Metric(std::size_t n, RationalVector distances) : n_(n), d_(std::move(distances)) {
    if (n_ < 2) throw std::invalid_argument("Metric: need at least 2 points");
    if (d_.size() != pair_count(n_))
      throw std::invalid_argument("Metric: expected " + std::to_string(pair_count(n_)) +
                                  " distances for n=" + std::to_string(n_) + ", got " +
                                  std::to_string(d_.size()));
  }

  static Metric zero(std::size_t n) { return Metric(n, RationalVector(pair_count(n))); }

  std::size_t n() const { return n_; }
  std::size_t size() const { return d_.size(); }
  const RationalVector& values() const { return d_; }

  /// d(i,j) with 1-based vertices; d(i,i) = 0.
  Rational operator()(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    if (i > j) std::swap(i, j);
    return d_[pair_index(i, j, n_)];
  }

  void set(std::size_t i, std::size_t j, const Rational& value) {
    if (i > j) std::swap(i, j);
    d_[pair_index(i, j, n_)] = value;
  }

  Metric scaled(const Rational& factor) const {
    RationalVector out(d_);
    for (auto& v : out) v *= factor;
    return Metric(n_, std::move(out));
  }

  friend bool operator==(const Metric& a, const Metric& b) { return a.n_ == b.n_ && a.d_ == b.d_; }

 private:
  std::size_t n_;
  RationalVector d_;
};

struct TriangleViolation {
  std::size_t i, j, via;  // d(i,j) > d(i,via) + d(via,j)
  Rational slack;         // d(i,via) + d(via,j) - d(i,j), always negative
};

struct EntryViolation {
  std::size_t i, j;
  Rational value;
};

struct ValidationReport {
  std::vector<EntryViolation> negative_entries;
  std::vector<EntryViolation> zero_entries;  // populated in strict mode only
  std::vector<TriangleViolation> triangle_violations;

  bool valid() const {
    return negative_entries.empty() && zero_entries.empty() && triangle_violations.empty();
  }
};

/// Reports every negative entry, every zero entry (strict mode), and every
/// violated triangle inequality. Does not stop at the first problem.
inline ValidationReport validate_metric(const Metric& d, bool strict) {
  ValidationReport report;
  const std::size_t n = d.n();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      Rational v = d(i, j);
      if (v < 0) report.negative_entries.push_back({i, j, v});
      else if (strict && v == 0) report.zero_entries.push_back({i, j, v});
      for (std::size_t k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        Rational slack = d(i, k) + d(k, j) - v;
        if (slack < 0) report.triangle_violations.push_back({i, j, k, slack});
      }
    }
  }
  return report;
}

struct MetricSummary {
  Rational trace;
  RationalVector star_traces;  // star_traces[i-1] = s_i
};

inline MetricSummary summarize(const Metric& d) {
  MetricSummary s{0, RationalVector(d.n())};
  for (std::size_t k = 0; k < d.size(); ++k) {
    auto [i, j] = pair_at(k, d.n());
    const Rational& v = d.values()[k];
    s.trace += v;
    s.star_traces[i - 1] += v;
    s.star_traces[j - 1] += v;
  }
  return s;
}

}  // namespace cutcone
