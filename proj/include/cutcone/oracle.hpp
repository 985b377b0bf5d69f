#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcone/certificate.hpp"
#include "cutcone/cut_algebra.hpp"
#include "cutcone/matrix.hpp"
#include "cutcone/metric.hpp"

namespace cutcone {

inline constexpr std::size_t kDefaultMaxOracleCutN = 10;
inline constexpr std::size_t kDefaultMaxOraclePaircutN = 14;

enum class Feasibility { feasible, infeasible };

/// Outcome of deciding  { w >= 0 : M w = d }.
/// Exactly one of witness / farkas is set. A Farkas vector y satisfies
/// y^T M <= 0 entrywise and y^T d > 0.
struct FeasibilityResult {
  Feasibility status = Feasibility::infeasible;
  std::optional<RationalVector> witness;
  std::optional<RationalVector> farkas;
  std::size_t pivots = 0;

  bool feasible() const { return status == Feasibility::feasible; }
};

inline bool verify_witness(const RationalMatrix& m, const RationalVector& d, const RationalVector& w) {
  if (w.size() != m.cols() || d.size() != m.rows()) return false;
  for (const auto& v : w)
    if (v < 0) return false;
  return m * w == d;
}

inline bool verify_farkas(const RationalMatrix& m, const RationalVector& d, const RationalVector& y) {
  if (y.size() != m.rows() || d.size() != m.rows()) return false;
  Rational dot = 0;
  for (std::size_t i = 0; i < y.size(); ++i) dot += y[i] * d[i];
  if (dot <= 0) return false;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) s += y[r] * m(r, c);
    if (s > 0) return false;
  }
  return true;
}

namespace detail {

// Double-precision phase I with the same pivoting rules. Its final basis
// only seeds the exact solver; no decision is taken from it.
inline std::vector<std::size_t> float_phase_one_basis(const RationalMatrix& m, const RationalVector& d) {
  constexpr double eps = 1e-9;
  const std::size_t rows = m.rows(), cols = m.cols(), width = cols + rows;
  std::vector<double> t(rows * width, 0.0), rhs(rows), reduced(width, 0.0);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const double sign = d[i] < 0 ? -1.0 : 1.0;
    rhs[i] = sign * d[i].get_d();
    for (std::size_t j = 0; j < cols; ++j) t[i * width + j] = sign * m(i, j).get_d();
    t[i * width + cols + i] = 1.0;
    basis[i] = cols + i;
    for (std::size_t j = 0; j < cols; ++j) reduced[j] -= t[i * width + j];
  }
  const std::size_t max_pivots = 50 * width;
  std::size_t streak = 0;
  for (std::size_t iter = 0; iter < max_pivots; ++iter) {
    const bool bland = streak >= 50;
    std::size_t e = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j] >= -eps) continue;
      if (e == cols || (!bland && reduced[j] < reduced[e])) e = j;
      if (bland) break;
    }
    if (e == cols) break;
    std::size_t r = rows;
    double best = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      const double a = t[i * width + e];
      if (a <= eps) continue;
      const double ratio = rhs[i] / a;
      if (r == rows || ratio < best - eps || (ratio <= best + eps && basis[i] < basis[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == rows) break;
    streak = best <= eps ? streak + 1 : 0;
    const double inv = 1.0 / t[r * width + e];
    for (std::size_t j = 0; j < width; ++j) t[r * width + j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      const double f = t[i * width + e];
      if (i == r || f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[i * width + j] -= f * t[r * width + j];
      rhs[i] -= f * rhs[r];
    }
    const double f = reduced[e];
    for (std::size_t j = 0; j < width; ++j) reduced[j] -= f * t[r * width + j];
    basis[r] = e;
  }
  return basis;
}

// Phase-I simplex on [M | I] x = |d| with one artificial per row, minimizing
// the artificial sum. Entering columns follow the most negative reduced cost;
// after a run of degenerate pivots the rule drops to Bland's (lowest index)
// until the objective moves again, which rules out cycling. Leaving rows use
// the minimum ratio with ties broken by lowest basic index.
// Artificials are never re-admitted once they leave the basis; the final
// reduced costs of the structural columns still certify optimality of the
// dual vector used as the Farkas certificate.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const RationalMatrix& m, const RationalVector& d)
      : rows_(m.rows()), structural_(m.cols()), width_(m.cols() + m.rows()),
        tableau_(rows_ * width_), rhs_(rows_), sign_(rows_, 1), basis_(rows_), reduced_(width_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (d[i] < 0) sign_[i] = -1;
      rhs_[i] = sign_[i] < 0 ? Rational(-d[i]) : d[i];
      for (std::size_t j = 0; j < structural_; ++j)
        if (sgn(m(i, j)) != 0) at(i, j) = sign_[i] < 0 ? Rational(-m(i, j)) : m(i, j);
      at(i, structural_ + i) = 1;
      basis_[i] = structural_ + i;
    }
    for (std::size_t j = 0; j < structural_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) reduced_[j] -= at(i, j);
  }

  std::size_t run() {
    std::size_t pivots = 0, degenerate_streak = 0;
    for (;;) {
      if (sgn(objective()) == 0) return pivots;
      const bool bland = degenerate_streak >= kDegenerateStreakLimit;
      std::size_t entering = structural_;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (sgn(reduced_[j]) >= 0) continue;
        if (entering == structural_ || (!bland && reduced_[j] < reduced_[entering])) entering = j;
        if (bland) break;
      }
      if (entering == structural_) return pivots;

      std::size_t leaving = rows_;
      Rational best, ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(at(i, entering)) <= 0) continue;
        ratio = rhs_[i] / at(i, entering);
        if (leaving == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      // Phase I is bounded below by zero, so some row always qualifies.
      if (leaving == rows_) throw std::logic_error("phase-one simplex: unbounded direction");
      degenerate_streak = sgn(best) == 0 ? degenerate_streak + 1 : 0;
      pivot(leaving, entering);
      ++pivots;
    }
  }

  // Moves the simplex to the given basis (one column index per row, with
  // artificials numbered after the structural columns). Returns false if
  // that basis is singular or its basic solution is infeasible, in which
  // case the caller starts over.
  bool crash(const std::vector<std::size_t>& target, std::size_t& pivots) {
    std::vector<char> keep(rows_, 0);
    for (std::size_t c : target)
      if (c >= structural_ && c < width_) keep[c - structural_] = 1;
    for (std::size_t c : target) {
      if (c >= structural_) continue;
      std::size_t row = rows_;
      for (std::size_t i = 0; i < rows_ && row == rows_; ++i)
        if (basis_[i] >= structural_ && !keep[basis_[i] - structural_] && sgn(at(i, c)) != 0) row = i;
      if (row == rows_) return false;
      pivot(row, c);
      ++pivots;
    }
    for (const auto& v : rhs_)
      if (sgn(v) < 0) return false;
    return true;
  }

  Rational objective() const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] >= structural_) z += rhs_[i];
    return z;
  }

  const RationalVector& rhs() const { return rhs_; }

  RationalVector primal() const {
    RationalVector w(structural_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < structural_) w[basis_[i]] = rhs_[i];
    return w;
  }

  // y = c_B^T B^{-1}, mapped back through the row sign flips.
  RationalVector dual() const {
    RationalVector y(rows_);
    for (std::size_t k = 0; k < rows_; ++k) {
      for (std::size_t i = 0; i < rows_; ++i)
        if (basis_[i] >= structural_) y[k] += at(i, structural_ + k);
      if (sign_[k] < 0) y[k] = -y[k];
    }
    return y;
  }

 private:
  static constexpr std::size_t kDegenerateStreakLimit = 50;

  Rational& at(std::size_t i, std::size_t j) { return tableau_[i * width_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return tableau_[i * width_ + j]; }

  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = 1 / at(r, e);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(at(r, j)) != 0) {
        at(r, j) *= inv;
        support.push_back(j);
      }
    rhs_[r] *= inv;

    Rational factor, tmp;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(at(i, e)) == 0) continue;
      factor = at(i, e);
      for (std::size_t j : support) {
        tmp = factor * at(r, j);
        at(i, j) -= tmp;
      }
      tmp = factor * rhs_[r];
      rhs_[i] -= tmp;
    }
    if (sgn(reduced_[e]) != 0) {
      factor = reduced_[e];
      for (std::size_t j : support) {
        tmp = factor * at(r, j);
        reduced_[j] -= tmp;
      }
    }
    basis_[r] = e;
  }

  std::size_t rows_, structural_, width_;
  std::vector<Rational> tableau_;
  RationalVector rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  RationalVector reduced_;
};

}  // namespace detail

/// Exact feasibility of M w = d, w >= 0. A floating-point pass proposes a
/// starting basis; the exact simplex then runs to optimality from it. The
/// returned witness or Farkas vector has been checked against M and d.
inline FeasibilityResult lp_feasibility(const RationalMatrix& m, const RationalVector& d) {
  if (d.size() != m.rows())
    throw std::invalid_argument("lp_feasibility: right-hand side has " + std::to_string(d.size()) +
                                " entries, matrix has " + std::to_string(m.rows()) + " rows");
  FeasibilityResult result;
  detail::PhaseOneSimplex simplex(m, d);
  if (!simplex.crash(detail::float_phase_one_basis(m, d), result.pivots)) {
    simplex = detail::PhaseOneSimplex(m, d);
    result.pivots = 0;
  }
  result.pivots += simplex.run();
  if (sgn(simplex.objective()) == 0) {
    result.status = Feasibility::feasible;
    result.witness = simplex.primal();
    if (!verify_witness(m, d, *result.witness)) throw std::logic_error("lp_feasibility: witness failed verification");
  } else {
    result.status = Feasibility::infeasible;
    result.farkas = simplex.dual();
    if (!verify_farkas(m, d, *result.farkas)) throw std::logic_error("lp_feasibility: Farkas vector failed verification");
  }
  return result;
}

/// Membership in CUT_n by exact LP over all 2^n - 2 nontrivial cuts.
inline FeasibilityResult cutcone_membership(const Metric& d, std::size_t max_n = kDefaultMaxOracleCutN) {
  check_cut_size(d.n(), max_n);
  return lp_feasibility(full_cut_matrix(d.n(), max_n), d.values());
}

/// Membership in PCUT_n by exact LP over the pair-cuts; valid for every n >= 3.
inline FeasibilityResult paircut_membership_exact(const Metric& d, std::size_t max_n = kDefaultMaxOraclePaircutN) {
  check_cut_size(d.n(), max_n);
  return lp_feasibility(square_cut_matrix(d.n()), d.values());
}

/// Converts a feasible CUT_n result into a certificate over its nonzero weights.
inline CutCertificate certificate_from_witness(std::size_t n, const RationalVector& witness,
                                               std::size_t max_n = kDefaultMaxCutN) {
  std::vector<Cut> cuts = enumerate_cuts(n, max_n);
  if (witness.size() != cuts.size()) throw std::invalid_argument("certificate_from_witness: length mismatch");
  CutCertificate cert{n, {}, {}};
  for (std::size_t k = 0; k < cuts.size(); ++k)
    if (sgn(witness[k]) != 0) cert.add(cuts[k], witness[k]);
  return cert;
}

/// Same for a feasible PCUT_n result: weights are indexed by pair.
inline CutCertificate certificate_from_pair_weights(std::size_t n, const RationalVector& weights) {
  if (weights.size() != pair_count(n)) throw std::invalid_argument("certificate_from_pair_weights: length mismatch");
  CutCertificate cert{n, {}, {}};
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (sgn(weights[k]) == 0) continue;
    auto [i, j] = pair_at(k, n);
    cert.add(Cut::from_members(n, {i, j}), weights[k]);
  }
  return cert;
}

}  // namespace cutcone
