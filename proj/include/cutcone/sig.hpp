#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcone/graph.hpp"
#include "cutcone/metric.hpp"
#include "cutcone/paircut.hpp"

namespace cutcone {

/// d_0: 1 on edges, 2 on non-adjacent pairs.
inline Metric truncated_metric(const SimpleGraph& g) {
  if (g.n() < 2) throw std::invalid_argument("truncated_metric: need at least 2 vertices");
  Metric d = Metric::zero(g.n());
  for (std::size_t i = 1; i <= g.n(); ++i)
    for (std::size_t j = i + 1; j <= g.n(); ++j) d.set(i, j, g.has_edge(i, j) ? 1 : 2);
  return d;
}

/// d_1: shortest edge-path length.
inline Metric graph_metric(const SimpleGraph& g) {
  if (g.n() < 2) throw std::invalid_argument("graph_metric: need at least 2 vertices");
  Metric d = Metric::zero(g.n());
  for (std::size_t i = 1; i <= g.n(); ++i) {
    std::vector<std::size_t> dist = g.distances_from(i);
    for (std::size_t j = i + 1; j <= g.n(); ++j) {
      if (dist[j - 1] == SIZE_MAX) throw std::invalid_argument("graph_metric: graph is disconnected");
      d.set(i, j, static_cast<unsigned long>(dist[j - 1]));
    }
  }
  return d;
}

/// r_i = min_{j != i} d(i,j).
inline RationalVector influence_radii(const Metric& d) {
  RationalVector r(d.n());
  for (std::size_t i = 1; i <= d.n(); ++i) {
    bool first = true;
    for (std::size_t j = 1; j <= d.n(); ++j) {
      if (j == i) continue;
      Rational v = d(i, j);
      if (first || v < r[i - 1]) r[i - 1] = v;
      first = false;
    }
  }
  return r;
}

namespace detail {
inline void require_strict(const Metric& d, const char* what) {
  for (const auto& v : d.values())
    if (v <= 0) throw std::invalid_argument(std::string(what) + ": needs positive off-diagonal distances");
}
}  // namespace detail

/// Sphere-of-influence graph: edge iff d(i,j) < r_i + r_j (ties are non-edges).
inline SimpleGraph sig_graph(const Metric& d) {
  detail::require_strict(d, "sig_graph");
  RationalVector r = influence_radii(d);
  SimpleGraph g(d.n());
  for (std::size_t i = 1; i <= d.n(); ++i)
    for (std::size_t j = i + 1; j <= d.n(); ++j)
      if (d(i, j) < r[i - 1] + r[j - 1]) g.add_edge(i, j);
  return g;
}

enum class SigCheck { strict_pass, nonstrict_pass, fail };

struct SigPairCheck {
  std::size_t i, j;
  bool edge;
  SigCheck outcome;
  Rational slack;  // r_i + r_j - d(i,j)
};

struct SigReport {
  RationalVector radii;
  std::vector<SigPairCheck> checks;  // lexicographic pair order
  bool pass() const {
    for (const auto& c : checks)
      if (c.outcome == SigCheck::fail) return false;
    return true;
  }
};

/// Checks every SIG inequality of d against the target graph.
inline SigReport verify_sig_metric(const Metric& d, const SimpleGraph& g) {
  if (d.n() != g.n()) throw std::invalid_argument("verify_sig_metric: metric and graph sizes differ");
  detail::require_strict(d, "verify_sig_metric");
  SigReport report{influence_radii(d), {}};
  for (std::size_t i = 1; i <= d.n(); ++i)
    for (std::size_t j = i + 1; j <= d.n(); ++j) {
      Rational slack = report.radii[i - 1] + report.radii[j - 1] - d(i, j);
      const bool edge = g.has_edge(i, j);
      SigCheck outcome;
      if (edge) outcome = slack > 0 ? SigCheck::strict_pass : SigCheck::fail;
      else outcome = slack <= 0 ? SigCheck::nonstrict_pass : SigCheck::fail;
      report.checks.push_back({i, j, edge, outcome, std::move(slack)});
    }
  return report;
}

/// Result of testing the star graph S(n) against PCUT_{n+1}.
/// Vertex 1 is the center; peripheral vertex i (1-based) is vertex i+1.
struct StarObstruction {
  Metric metric;         // d(center, i) = a_i, d(i, j) = a_i + a_j
  SigReport sig;
  PaircutVerdict paircut;
  std::size_t min_leaf;  // internal vertex of the peripheral point with least a_i
  bool obstruction_holds() const { return sig.pass() && !paircut.member; }
};

inline StarObstruction star_graph_obstruction(std::size_t n, const RationalVector& a) {
  if (n < 4) throw std::invalid_argument("star_graph_obstruction: need n >= 4");
  if (a.size() != n) throw std::invalid_argument("star_graph_obstruction: need exactly n radii");
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] <= 0) throw std::invalid_argument("star_graph_obstruction: radii must be positive");
    if (a[i] < a[argmin]) argmin = i;
  }
  Metric d = Metric::zero(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    d.set(1, i + 2, a[i]);
    for (std::size_t j = i + 1; j < n; ++j) d.set(i + 2, j + 2, a[i] + a[j]);
  }
  SigReport sig = verify_sig_metric(d, families::star(n));
  PaircutVerdict verdict = paircut_membership(d);
  return {std::move(d), std::move(sig), std::move(verdict), argmin + 2};
}

}  // namespace cutcone
