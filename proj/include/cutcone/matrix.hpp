#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cutcone/rational.hpp"

namespace cutcone {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix ones(std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (auto& v : m.data_) v = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  RationalVector column(std::size_t c) const {
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  RationalMatrix& operator+=(const RationalMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  RationalMatrix& operator-=(const RationalMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  RationalMatrix& operator*=(const Rational& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
    RationalMatrix out(a.rows_, b.cols_);
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b(k, j)) == 0) continue;
          t = aik * b(k, j);
          out(i, j) += t;
        }
      }
    return out;
  }

  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    RationalVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (sgn(a(i, k)) != 0 && sgn(x[k]) != 0) out[i] += a(i, k) * x[k];
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by Gaussian elimination over the rationals.
inline std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(r, k));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

/// One row per line, entries as space-separated canonical rationals.
inline void write_matrix_text(std::ostream& os, const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << to_string(m(r, c));
    }
    os << '\n';
  }
}

}  // namespace cutcone
