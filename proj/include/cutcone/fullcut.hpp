#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutcone/certificate.hpp"
#include "cutcone/cut_algebra.hpp"
#include "cutcone/metric.hpp"

namespace cutcone {

/// w = S_r d, the minimum-norm solution of S w = d:
///   w_C = 2^{-(n-2)} (s_C - Tr(d) |C|(n-|C|) / (m+1)).
/// Indexed by the enumerate_cuts order.
inline RationalVector candidate_solution(const Metric& d, std::size_t max_n = kDefaultMaxCutN) {
  const std::size_t n = d.n();
  std::vector<Cut> cuts = enumerate_cuts(n, max_n);
  const Rational trace = summarize(d).trace;
  const Rational trace_share = trace / Rational(static_cast<long>(pair_count(n) + 1));
  const Rational scale(mpz_class(1), mpz_class(1) << static_cast<mp_bitcnt_t>(n - 2));
  RationalVector w(cuts.size());
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const long size = static_cast<long>(cuts[k].size());
    w[k] = scale * (cut_trace(d, cuts[k]) - trace_share * (size * (static_cast<long>(n) - size)));
  }
  return w;
}

struct CutInequality {
  Cut cut;        // representative: the member of {C, complement} listed first
  Rational slack; // s_C - |C|(n-|C|) Tr(d)/(m+1)
};

enum class SufficientVerdict { member, inconclusive };

struct SufficientConditionResult {
  SufficientVerdict verdict = SufficientVerdict::inconclusive;
  std::vector<CutInequality> slacks;    // one per complement class, in cut order
  std::vector<CutInequality> failing;   // subset of slacks with negative slack
  std::optional<CutCertificate> certificate;  // set when verdict == member
};

/// Checks s_C >= |C|(n-|C|) Tr(d) / (m+1) for every nontrivial cut. Passing
/// proves membership in CUT_n; failing proves nothing.
inline SufficientConditionResult sufficient_condition(const Metric& d, std::size_t max_n = kDefaultMaxCutN) {
  const std::size_t n = d.n();
  std::vector<Cut> cuts = enumerate_cuts(n, max_n);
  const Rational trace_share = summarize(d).trace / Rational(static_cast<long>(pair_count(n) + 1));
  SufficientConditionResult result;
  const std::size_t classes = cuts.size() / 2;  // k and 2^n-1-k pair up
  result.slacks.reserve(classes);
  for (std::size_t k = 0; k < classes; ++k) {
    const long size = static_cast<long>(cuts[k].size());
    Rational slack = cut_trace(d, cuts[k]) - trace_share * (size * (static_cast<long>(n) - size));
    result.slacks.push_back({cuts[k], slack});
    if (slack < 0) result.failing.push_back({cuts[k], std::move(slack)});
  }
  if (result.failing.empty()) {
    result.verdict = SufficientVerdict::member;
    RationalVector w = candidate_solution(d, max_n);
    CutCertificate cert{n, {}, {}};
    for (std::size_t k = 0; k < cuts.size(); ++k)
      if (sgn(w[k]) != 0) cert.add(cuts[k], w[k]);
    result.certificate = std::move(cert);
  }
  return result;
}

/// Vector over the cut coordinates with few nonzeros; values are small integers.
struct SparseCutVector {
  std::size_t length = 0;
  std::vector<std::pair<std::size_t, int>> entries;  // (cut position, value), positions ascending

  RationalVector dense() const {
    RationalVector v(length);
    for (auto [k, x] : entries) v[k] = x;
    return v;
  }
};

enum class KernelFamily { skew, alternating };

struct KernelVector {
  KernelFamily family;
  std::size_t skew_index = 0;  // k for phi_k (1-based)
  std::vector<std::size_t> subset;  // T for psi_T
  SparseCutVector vector;

  std::string label() const {
    if (family == KernelFamily::skew) return "phi_" + std::to_string(skew_index);
    std::string s = "psi_{";
    for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i]);
    return s + "}";
  }
};

struct KernelBasis {
  std::size_t n = 0;
  std::vector<KernelVector> vectors;
  bool normative = true;  // false for n < 5
};

/// phi_k = e_k - e_{2^n-1-k} (1-based positions in cut order).
inline SparseCutVector skew_vector(std::size_t k, std::size_t n) {
  const std::size_t count = (std::size_t{1} << n) - 2;
  if (k < 1 || k > count / 2) throw std::out_of_range("skew_vector: k out of range");
  return {count, {{k - 1, 1}, {count - k, -1}}};
}

/// psi_T = sum over nontrivial cuts C subset of T of (-1)^{|C|} e_C.
inline SparseCutVector alternating_sum_vector(std::uint64_t subset_mask, const CutIndex& index) {
  SparseCutVector v{index.size(), {}};
  // Enumerate nonempty submasks of T.
  for (std::uint64_t c = subset_mask; c != 0; c = (c - 1) & subset_mask) {
    std::size_t pos = index.position(c);
    if (pos == CutIndex::npos) continue;  // C = V_n
    v.entries.emplace_back(pos, (std::popcount(c) % 2) ? -1 : 1);
  }
  std::sort(v.entries.begin(), v.entries.end());
  return v;
}

/// Basis of ker S: phi_1..phi_{n-1} together with psi_T for every T with |T| >= 3.
/// The psi_T are listed in the same graded-lexicographic order as cuts.
inline KernelBasis kernel_basis(std::size_t n, std::size_t max_n = kDefaultMaxCutN) {
  CutIndex index(n, max_n);
  KernelBasis basis{n, {}, n >= 5};
  for (std::size_t k = 1; k < n; ++k)
    basis.vectors.push_back({KernelFamily::skew, k, {}, skew_vector(k, n)});
  auto add_subset = [&](std::uint64_t mask) {
    Cut t(n, mask);
    basis.vectors.push_back({KernelFamily::alternating, 0, t.members(), alternating_sum_vector(mask, index)});
  };
  for (const Cut& t : index.cuts())
    if (t.size() >= 3) add_subset(t.mask());
  add_subset(Cut(n, 0).full_mask());
  return basis;
}

/// S v for a sparse cut vector, as a vector over pairs.
inline RationalVector apply_full_cut_matrix(const SparseCutVector& v, const CutIndex& index) {
  const std::size_t n = index.n();
  RationalVector out(pair_count(n));
  for (auto [pos, x] : v.entries) {
    const Cut& c = index[pos];
    std::size_t k = 0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j, ++k)
        if (c.separates(i, j)) out[k] += x;
  }
  return out;
}

}  // namespace cutcone
