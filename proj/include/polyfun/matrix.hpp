#pragma once

// Dense matrices over an exact field. Elimination always picks, within the
// current column, the first row (top to bottom) holding a nonzero entry; the
// column order is left to right. This pivot rule is part of the contract:
// every factorization-derived certificate must be bit-reproducible.

#include <optional>
#include <vector>

#include "polyfun/error.hpp"

namespace polyfun {

template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const F& fill = F())
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw error("DimensionMismatch", "negative matrix dimension");
  }

  static Matrix identity(int n, const F& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  F& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const F& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw error("NonConformable", "matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const F& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) += x * o.at(k, j);
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("NonConformable", "matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("NonConformable", "matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  Matrix scaled(const F& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw error("NonConformable", "matrix-vector shape mismatch");
    std::vector<F> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  // Row-reduce in place; returns pivot columns (ascending). First-nonzero rule.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int pr = -1;
      for (int i = row; i < rows_; ++i)
        if (!at(i, col).is_zero()) { pr = i; break; }
      if (pr < 0) continue;
      if (pr != row)
        for (int j = 0; j < cols_; ++j) std::swap(at(row, j), at(pr, j));
      F inv = at(row, col).inv();
      for (int j = col; j < cols_; ++j) at(row, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row || at(i, col).is_zero()) continue;
        F f = at(i, col);
        for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Matrix copy = *this;
    return static_cast<int>(copy.rref().size());
  }

  // Solves A x = b exactly. Deterministic particular solution: free
  // variables are set to zero. Empty optional when inconsistent.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw error("NonConformable", "rhs length mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<F> x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
  }

  // Basis of the column space: the pivot columns of this matrix, in column
  // order (deterministic by the pivot rule).
  std::vector<int> column_space_pivots() const {
    Matrix copy = *this;
    return copy.rref();
  }

  Matrix columns(const std::vector<int>& idx) const {
    Matrix r(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < static_cast<int>(idx.size()); ++j) r.at(i, j) = at(i, idx[j]);
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<F> a_;
};

}  // namespace polyfun
