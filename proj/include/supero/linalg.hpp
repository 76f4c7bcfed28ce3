#ifndef SUPERO_LINALG_HPP
#define SUPERO_LINALG_HPP

// Dense exact linear algebra over Q. Matrices here are small (weight spaces of
// low-rank modules), so dense row-major storage with fraction-free pivoting is
// enough.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace supero {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j].size() == rows);
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  Matrix& operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b(k, j)) == 0) continue;
          t = aik * b(k, j);
          c(i, j) += t;
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<Rational> apply(std::span<const Rational> v) const {
    assert(v.size() == cols_);
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  // Stack b below a (same column count).
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    assert(a.cols_ == b.cols_);
    Matrix c(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), c.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), c.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return c;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ == 0) return b;
    if (b.cols_ == 0) return a;
    assert(a.rows_ == b.rows_);
    Matrix c(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
    }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

// Basis of {x : m x = 0}, returned as the columns of a (cols x k) matrix.
inline Matrix nullspace(Matrix m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix::identity(n);
  auto piv = rref(m);
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix basis(n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -m(r, free[k]);
  }
  return basis;
}

// Independent columns spanning the column space of m (in reduced form).
inline Matrix column_basis(const Matrix& m) {
  if (m.cols() == 0) return Matrix(m.rows(), 0);
  Matrix t = m.transpose();
  auto piv = rref(t);
  Matrix out(m.rows(), piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = t(k, i);
  return out;
}

// Quotient data for V / U where U is spanned by the columns of `sub`:
// `project` maps V onto coordinates of a complement (kernel exactly U) and
// `lift` embeds those coordinates back into V with project * lift = I.
struct QuotientMaps {
  Matrix project;
  Matrix lift;
};

inline QuotientMaps quotient_maps(const Matrix& sub, std::size_t dim) {
  Matrix rows = sub.cols() ? sub.transpose() : Matrix(0, dim);
  auto piv = rows.rows() ? rref(rows) : std::vector<std::size_t>{};
  std::vector<bool> is_piv(dim, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < dim; ++j)
    if (!is_piv[j]) keep.push_back(j);
  QuotientMaps q{Matrix(keep.size(), dim), Matrix(dim, keep.size())};
  // x - sum_r x[piv_r] * row_r vanishes on pivots; the survivors are the
  // quotient coordinates.
  for (std::size_t k = 0; k < keep.size(); ++k) {
    q.project(k, keep[k]) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) q.project(k, piv[r]) -= rows(r, keep[k]);
    q.lift(keep[k], k) = 1;
  }
  return q;
}

// Intersection of the column spaces of a and b (both with the same row count).
inline Matrix intersect_columns(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
  Matrix ab = Matrix::hstack(a, b);
  Matrix ker = nullspace(ab);
  Matrix coeff(a.cols(), ker.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < ker.cols(); ++k) coeff(i, k) = ker(i, k);
  return column_basis(a * coeff);
}

// Solve a x = b for a single right-hand side; returns false when inconsistent.
inline bool solve(const Matrix& a, std::span<const Rational> b, std::vector<Rational>& x) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return false;
  x.assign(a.cols(), Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return true;
}

}  // namespace supero

#endif
