#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cutcone/certificate.hpp"
#include "cutcone/graph.hpp"
#include "cutcone/metric.hpp"

namespace cutcone {

enum class Norm { l1, linf };

/// n points in a common dimension, tagged with the norm that induces distances.
struct PointSet {
  Norm norm = Norm::l1;
  std::vector<RationalVector> points;

  std::size_t n() const { return points.size(); }
  std::size_t dimension() const { return points.empty() ? 0 : points.front().size(); }

  Rational distance(std::size_t i, std::size_t j) const {
    const RationalVector& x = points.at(i - 1);
    const RationalVector& y = points.at(j - 1);
    if (x.size() != y.size()) throw std::invalid_argument("PointSet: points differ in dimension");
    Rational out = 0, diff;
    for (std::size_t k = 0; k < x.size(); ++k) {
      diff = abs(x[k] - y[k]);
      if (norm == Norm::l1) out += diff;
      else if (diff > out) out = diff;
    }
    return out;
  }

  Metric induced_metric() const {
    Metric d = Metric::zero(n());
    for (std::size_t i = 1; i <= n(); ++i)
      for (std::size_t j = i + 1; j <= n(); ++j) d.set(i, j, distance(i, j));
    return d;
  }
};

/// Point i gets coordinate w_k on axis k exactly when i lies in cut C_k.
/// Zero-weight cuts are dropped, so the dimension is the number of positive weights.
inline PointSet l1_embedding(const CutCertificate& cert) {
  if (cert.n < 2) throw std::invalid_argument("l1_embedding: need at least 2 points");
  CertificateReport report = verify_cut_certificate(cert, cert.reconstruct());
  if (!report.valid) throw std::invalid_argument("l1_embedding: certificate is not a valid cut decomposition");
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < cert.cuts.size(); ++k)
    if (sgn(cert.weights[k]) != 0) kept.push_back(k);
  PointSet pts{Norm::l1, std::vector<RationalVector>(cert.n, RationalVector(kept.size()))};
  for (std::size_t axis = 0; axis < kept.size(); ++axis) {
    const Cut& c = cert.cuts[kept[axis]];
    for (std::size_t i = 1; i <= cert.n; ++i)
      if (c.contains(i)) pts.points[i - 1][axis] = cert.weights[kept[axis]];
  }
  return pts;
}

struct IsometryMismatch {
  std::size_t i, j;
  Rational expected, actual;
};

struct IsometryReport {
  std::vector<IsometryMismatch> mismatches;
  bool isometric() const { return mismatches.empty(); }
};

inline IsometryReport verify_isometry(const PointSet& pts, const Metric& d) {
  if (pts.n() != d.n()) throw std::invalid_argument("verify_isometry: point count differs from metric size");
  IsometryReport report;
  for (std::size_t i = 1; i <= d.n(); ++i)
    for (std::size_t j = i + 1; j <= d.n(); ++j) {
      Rational actual = pts.distance(i, j);
      if (actual != d(i, j)) report.mismatches.push_back({i, j, d(i, j), std::move(actual)});
    }
  return report;
}

/// Rows of E + 2I with the last column removed, read in the l-infinity norm.
inline PointSet linf_sig_embedding(const SimpleGraph& g) {
  if (g.n() < 2) throw std::invalid_argument("linf_sig_embedding: need at least 2 vertices");
  if (!g.connected()) throw std::invalid_argument("linf_sig_embedding: graph is disconnected");
  const std::size_t n = g.n();
  PointSet pts{Norm::linf, std::vector<RationalVector>(n, RationalVector(n - 1))};
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j < n; ++j) pts.points[i - 1][j - 1] = i == j ? 2 : (g.has_edge(i, j) ? 1 : 0);
  return pts;
}

}  // namespace cutcone
