#pragma once

// Dense matrices over an exact field with Gaussian elimination.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bodycad/scalar.hpp"

namespace bodycad {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const F> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<F> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const F> values) {
    if (values.size() != cols_) throw std::invalid_argument("row width");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      using std::swap;
      swap((*this)(a, c), (*this)(b, c));
    }
  }

  /// Submatrix on the given row and column index lists, in the given order.
  Matrix select(std::span<const std::size_t> row_ids,
                std::span<const std::size_t> col_ids) const {
    Matrix out(row_ids.size(), col_ids.size());
    for (std::size_t r = 0; r < row_ids.size(); ++r) {
      for (std::size_t c = 0; c < col_ids.size(); ++c) {
        out(r, c) = (*this)(row_ids[r], col_ids[c]);
      }
    }
    return out;
  }

  std::vector<F> multiply(std::span<const F> x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector width");
    std::vector<F> y(rows_, F(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      F acc(0);
      for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
      y[r] = acc;
    }
    return y;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> reduce_to_rref(Matrix<F>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(row, pivot);
    const F inv = F(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const F factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(rank, pivot);
    const F inv = F(1) / a(rank, col);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, col))) continue;
      const F factor = a(r, col) * inv;
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(r, c) -= factor * a(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

template <class F>
F determinant(Matrix<F> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = a.rows();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != col) {
      a.swap_rows(col, pivot);
      det = -det;
    }
    det *= a(col, col);
    const F inv = F(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const F factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

/// Basis of the right null space, one vector per free column of the RREF.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> a) {
  const auto pivots = reduce_to_rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(a.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bodycad
