#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcone/cut_algebra.hpp"
#include "cutcone/metric.hpp"

namespace cutcone {

/// Nonnegative weights on cuts with sum_C w_C delta_C = d.
struct CutCertificate {
  std::size_t n = 0;
  std::vector<Cut> cuts;
  RationalVector weights;

  void add(const Cut& c, const Rational& w) {
    if (c.n() != n) throw std::invalid_argument("CutCertificate: cut has wrong vertex count");
    cuts.push_back(c);
    weights.push_back(w);
  }

  /// sum_C w_C delta_C, regardless of the sign of the weights.
  Metric reconstruct() const {
    if (cuts.size() != weights.size()) throw std::invalid_argument("CutCertificate: cuts/weights length mismatch");
    RationalVector d(pair_count(n));
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      if (sgn(weights[c]) == 0) continue;
      std::size_t k = 0;
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j, ++k)
          if (cuts[c].separates(i, j)) d[k] += weights[c];
    }
    return Metric(n, std::move(d));
  }
};

struct CertificateReport {
  bool valid = false;
  std::vector<std::size_t> negative_weights;  // positions into cert.cuts
  std::vector<std::size_t> malformed_cuts;    // wrong n or trivial
  struct Mismatch {
    std::size_t i, j;
    Rational expected, actual;
  };
  std::optional<Mismatch> first_mismatch;
};

inline CertificateReport verify_cut_certificate(const CutCertificate& cert, const Metric& d) {
  CertificateReport r;
  if (cert.n != d.n() || cert.cuts.size() != cert.weights.size()) {
    r.valid = false;
    return r;
  }
  for (std::size_t k = 0; k < cert.cuts.size(); ++k) {
    if (cert.cuts[k].n() != cert.n || !cert.cuts[k].nontrivial()) r.malformed_cuts.push_back(k);
    if (cert.weights[k] < 0) r.negative_weights.push_back(k);
  }
  if (r.malformed_cuts.empty()) {
    Metric sum = cert.reconstruct();
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (sum.values()[k] != d.values()[k]) {
        auto [i, j] = pair_at(k, d.n());
        r.first_mismatch = CertificateReport::Mismatch{i, j, d.values()[k], sum.values()[k]};
        break;
      }
    }
  }
  r.valid = r.negative_weights.empty() && r.malformed_cuts.empty() && !r.first_mismatch;
  return r;
}

}  // namespace cutcone
