#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cutcone/cut_algebra.hpp"
#include "cutcone/metric.hpp"

namespace cutcone {

/// One pair-cut inequality  s_i + s_j >= (n-4) d(i,j) + 2 Tr(d)/(n-2),
/// reported with slack = lhs - rhs.
struct PairInequality {
  std::size_t i, j;
  Rational slack;
};

struct PaircutVerdict {
  bool member = false;
  RationalVector weights;                 // w_sq, indexed by pair
  std::vector<PairInequality> violations; // sorted by pair index
};

namespace detail {
inline void require_closed_form(const Metric& d, const char* what) {
  if (d.n() < 5)
    throw std::domain_error(std::string(what) +
                            ": closed form needs n >= 5; use paircut_membership_exact for small n");
}
}  // namespace detail

/// Unique solution of S_sq w = d:
///   w_{ij} = -d(i,j)/2 - Tr/((n-2)(n-4)) + (s_i + s_j)/(2(n-4)).
inline RationalVector paircut_weights(const Metric& d) {
  detail::require_closed_form(d, "paircut_weights");
  const Rational n(static_cast<long>(d.n()));
  MetricSummary sum = summarize(d);
  const Rational trace_term = sum.trace / ((n - 2) * (n - 4));
  const Rational star_scale = Rational(1) / (2 * (n - 4));
  RationalVector w(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    auto [i, j] = pair_at(k, d.n());
    w[k] = -d.values()[k] / 2 - trace_term + (sum.star_traces[i - 1] + sum.star_traces[j - 1]) * star_scale;
  }
  return w;
}

/// Decides d in PCUT_n (n >= 5). Equality in an inequality counts as satisfied.
inline PaircutVerdict paircut_membership(const Metric& d) {
  detail::require_closed_form(d, "paircut_membership");
  const Rational n(static_cast<long>(d.n()));
  MetricSummary sum = summarize(d);
  const Rational trace_term = 2 * sum.trace / (n - 2);
  PaircutVerdict verdict;
  verdict.weights = paircut_weights(d);
  for (std::size_t k = 0; k < d.size(); ++k) {
    auto [i, j] = pair_at(k, d.n());
    Rational slack = sum.star_traces[i - 1] + sum.star_traces[j - 1] - (n - 4) * d.values()[k] - trace_term;
    if (slack < 0) verdict.violations.push_back({i, j, std::move(slack)});
  }
  verdict.member = verdict.violations.empty();
  return verdict;
}

/// Per-vertex slack (n-2) s_i - Tr(d). A negative entry certifies non-membership.
struct NecessaryConditionReport {
  RationalVector slacks;  // slacks[i-1]
  bool certifies_non_membership() const {
    for (const auto& s : slacks)
      if (s < 0) return true;
    return false;
  }
};

inline NecessaryConditionReport necessary_condition(const Metric& d) {
  detail::require_closed_form(d, "necessary_condition");
  const Rational n(static_cast<long>(d.n()));
  MetricSummary sum = summarize(d);
  NecessaryConditionReport r;
  r.slacks.reserve(d.n());
  for (const auto& s : sum.star_traces) r.slacks.push_back((n - 2) * s - sum.trace);
  return r;
}

/// When every star trace equals s: member <=> max d(i,j) <= s/(n-2).
/// Returns nullopt if n < 5 or the star traces differ.
inline std::optional<bool> constant_star_shortcut(const Metric& d) {
  if (d.n() < 5) return std::nullopt;
  MetricSummary sum = summarize(d);
  for (const auto& s : sum.star_traces)
    if (s != sum.star_traces.front()) return std::nullopt;
  Rational bound = sum.star_traces.front() / Rational(static_cast<long>(d.n()) - 2);
  for (const auto& v : d.values())
    if (v > bound) return false;
  return true;
}

}  // namespace cutcone
