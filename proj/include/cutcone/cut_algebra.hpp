#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcone/matrix.hpp"
#include "cutcone/metric.hpp"

namespace cutcone {

/// Largest n for which cut enumeration and the full cut-matrix are built.
inline constexpr std::size_t kDefaultMaxCutN = 16;

/// A subset C of V_n, stored as a bitmask (bit i-1 <=> vertex i).
class Cut {
 public:
  Cut(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {
    if (n_ == 0 || n_ > 63) throw std::invalid_argument("Cut: n must be in 1..63");
    if (mask_ >> n_) throw std::invalid_argument("Cut: mask has bits beyond vertex n");
  }

  static Cut from_members(std::size_t n, const std::vector<std::size_t>& members) {
    std::uint64_t mask = 0;
    for (std::size_t v : members) {
      if (v < 1 || v > n) throw std::invalid_argument("Cut: vertex " + std::to_string(v) + " outside 1..n");
      mask |= std::uint64_t{1} << (v - 1);
    }
    return Cut(n, mask);
  }
  static Cut from_members(std::size_t n, std::initializer_list<std::size_t> members) {
    return from_members(n, std::vector<std::size_t>(members));
  }

  std::size_t n() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool contains(std::size_t v) const { return (mask_ >> (v - 1)) & 1U; }
  bool nontrivial() const { return mask_ != 0 && mask_ != full_mask(); }
  Cut complement() const { return Cut(n_, full_mask() & ~mask_); }

  /// Does the cut separate vertices i and j?
  bool separates(std::size_t i, std::size_t j) const { return contains(i) != contains(j); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 1; v <= n_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  std::uint64_t full_mask() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  std::size_t n_;
  std::uint64_t mask_;
};

inline void check_cut_size(std::size_t n, std::size_t max_n) {
  if (n < 3) throw std::invalid_argument("need n >= 3, got " + std::to_string(n));
  if (n > max_n)
    throw std::length_error("n=" + std::to_string(n) + " exceeds the configured maximum " +
                            std::to_string(max_n));
}

/// All 2^n - 2 nontrivial cuts, ordered by cardinality and then
/// lexicographically within a cardinality. With this order the k-th cut
/// (1-based) and the (2^n - 1 - k)-th cut are complements.
inline std::vector<Cut> enumerate_cuts(std::size_t n, std::size_t max_n = kDefaultMaxCutN) {
  check_cut_size(n, max_n);
  std::vector<Cut> cuts;
  cuts.reserve((std::size_t{1} << n) - 2);
  std::vector<bool> selector(n);
  for (std::size_t s = 1; s < n; ++s) {
    std::fill(selector.begin(), selector.end(), false);
    std::fill(selector.begin(), selector.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      std::uint64_t mask = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (selector[v]) mask |= std::uint64_t{1} << v;
      cuts.emplace_back(n, mask);
    } while (std::prev_permutation(selector.begin(), selector.end()));
  }
  return cuts;
}

/// Mask -> position lookup for the enumerate_cuts order.
class CutIndex {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit CutIndex(std::size_t n, std::size_t max_n = kDefaultMaxCutN)
      : n_(n), cuts_(enumerate_cuts(n, max_n)), position_(std::size_t{1} << n, npos) {
    for (std::size_t k = 0; k < cuts_.size(); ++k) position_[cuts_[k].mask()] = k;
  }

  std::size_t n() const { return n_; }
  std::size_t size() const { return cuts_.size(); }
  const std::vector<Cut>& cuts() const { return cuts_; }
  const Cut& operator[](std::size_t k) const { return cuts_[k]; }

  /// Zero-based position of a nontrivial cut; npos for the trivial ones.
  std::size_t position(std::uint64_t mask) const { return position_.at(mask); }
  std::size_t position(const Cut& c) const { return position(c.mask()); }

 private:
  std::size_t n_;
  std::vector<Cut> cuts_;
  std::vector<std::size_t> position_;
};

/// delta_C as a 0/1 vector over pairs in lexicographic order.
inline RationalVector cut_metric_vector(const Cut& c) {
  const std::size_t n = c.n();
  RationalVector v(pair_count(n));
  std::size_t k = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j, ++k)
      if (c.separates(i, j)) v[k] = 1;
  return v;
}

inline Metric cut_metric(const Cut& c) { return Metric(c.n(), cut_metric_vector(c)); }

/// s_C: total distance across the cut.
inline Rational cut_trace(const Metric& d, const Cut& c) {
  if (c.n() != d.n()) throw std::invalid_argument("cut_trace: cut and metric sizes differ");
  if (!c.nontrivial()) throw std::invalid_argument("cut_trace: cut must be nontrivial");
  Rational s = 0;
  for (std::size_t i = 1; i <= d.n(); ++i) {
    if (!c.contains(i)) continue;
    for (std::size_t j = 1; j <= d.n(); ++j)
      if (!c.contains(j)) s += d(i, j);
  }
  return s;
}

/// Columns are the pair-cut metrics delta_{i,j}; equals the adjacency matrix of L(K_n).
inline RationalMatrix square_cut_matrix(std::size_t n) {
  if (n < 3) throw std::invalid_argument("square_cut_matrix: need n >= 3");
  const std::size_t m = pair_count(n);
  RationalMatrix a(m, m);
  for (std::size_t col = 0; col < m; ++col) {
    auto [p, q] = pair_at(col, n);
    RationalVector delta = cut_metric_vector(Cut::from_members(n, {p, q}));
    for (std::size_t row = 0; row < m; ++row) a(row, col) = delta[row];
  }
  return a;
}

/// Vertex-edge incidence matrix B of K_n (n x m).
inline RationalMatrix incidence_matrix(std::size_t n) {
  if (n < 3) throw std::invalid_argument("incidence_matrix: need n >= 3");
  RationalMatrix b(n, pair_count(n));
  for (std::size_t k = 0; k < pair_count(n); ++k) {
    auto [i, j] = pair_at(k, n);
    b(i - 1, k) = 1;
    b(j - 1, k) = 1;
  }
  return b;
}

/// Orthogonal projectors onto the three eigenspaces of the square cut-matrix.
struct SpectralProjectors {
  std::size_t n;
  RationalMatrix column_space;  // P_Col = B^T (B B^T)^{-1} B
  RationalMatrix minus_two;     // P_{-2}
  RationalMatrix top;           // P_{2n-4}
  RationalMatrix middle;        // P_{n-4}
};

inline void require_regular_square(std::size_t n, const char* what) {
  if (n < 5)
    throw std::domain_error(std::string(what) + ": the square cut-matrix is singular or degenerate for n < 5");
}

inline SpectralProjectors projectors(std::size_t n) {
  require_regular_square(n, "projectors");
  const std::size_t m = pair_count(n);
  const Rational nn(static_cast<long>(n));
  RationalMatrix b = incidence_matrix(n);
  // (B B^T)^{-1} = I/(n-2) - J/(2(n-1)(n-2))
  RationalMatrix gram_inverse = Rational(1) / (nn - 2) * RationalMatrix::identity(n) -
                                Rational(1) / (2 * (nn - 1) * (nn - 2)) * RationalMatrix::ones(n, n);
  RationalMatrix col = b.transpose() * gram_inverse * b;
  RationalMatrix top = Rational(1, static_cast<unsigned long>(m)) * RationalMatrix::ones(m, m);
  RationalMatrix minus_two = RationalMatrix::identity(m) - col;
  RationalMatrix middle = col - top;
  return {n, std::move(col), std::move(minus_two), std::move(top), std::move(middle)};
}

/// Closed-form inverse of the square cut-matrix, n >= 5.
inline RationalMatrix inverse_square_cut_matrix(std::size_t n) {
  require_regular_square(n, "inverse_square_cut_matrix");
  const Rational nn(static_cast<long>(n));
  SpectralProjectors p = projectors(n);
  const std::size_t m = pair_count(n);
  return Rational(-1, 2) * RationalMatrix::identity(m) - nn / (2 * (nn - 2) * (nn - 4)) * p.top +
         (nn - 2) / (2 * (nn - 4)) * p.column_space;
}

/// Full cut-matrix S: rows are pairs, columns the nontrivial cuts in enumerate_cuts order.
inline RationalMatrix full_cut_matrix(std::size_t n, std::size_t max_n = kDefaultMaxCutN) {
  std::vector<Cut> cuts = enumerate_cuts(n, max_n);
  RationalMatrix s(pair_count(n), cuts.size());
  for (std::size_t col = 0; col < cuts.size(); ++col) {
    std::size_t row = 0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j, ++row)
        if (cuts[col].separates(i, j)) s(row, col) = 1;
  }
  return s;
}

/// S_r = S^T (S S^T)^{-1} with (S S^T)^{-1} = 2^{-(n-2)} (I - J/(m+1)).
inline RationalMatrix right_inverse_full_cut_matrix(std::size_t n, std::size_t max_n = kDefaultMaxCutN) {
  RationalMatrix s = full_cut_matrix(n, max_n);
  const std::size_t m = pair_count(n);
  Rational scale(1);
  scale /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(n - 2));
  RationalMatrix gram_inverse =
      scale * (RationalMatrix::identity(m) -
               Rational(1, static_cast<unsigned long>(m + 1)) * RationalMatrix::ones(m, m));
  return s.transpose() * gram_inverse;
}

}  // namespace cutcone
