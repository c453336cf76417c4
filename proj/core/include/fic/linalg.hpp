#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fic {

// Dense row-major matrix over any field type with 0/1 construction from
// int, +, -, *, /, and ==.
template <class T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

  T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

template <class T>
Matrix<T> matrix_product(const Matrix<T>& A, const Matrix<T>& B) {
  if (A.cols != B.rows) throw std::invalid_argument("shape mismatch");
  Matrix<T> C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      const T& aik = A.at(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = C.at(i, j) + aik * B.at(k, j);
    }
  return C;
}

namespace detail {

// In-place reduction to row echelon form; returns the pivot columns.
template <class T>
std::vector<std::size_t> echelonize(Matrix<T>& M) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < M.cols && row < M.rows; ++col) {
    std::size_t sel = row;
    while (sel < M.rows && M.at(sel, col) == T(0)) ++sel;
    if (sel == M.rows) continue;
    if (sel != row)
      for (std::size_t j = col; j < M.cols; ++j)
        std::swap(M.at(sel, j), M.at(row, j));
    T inv = T(1) / M.at(row, col);
    for (std::size_t j = col; j < M.cols; ++j)
      M.at(row, j) = M.at(row, j) * inv;
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == row) continue;
      const T f = M.at(i, col);
      if (f == T(0)) continue;
      for (std::size_t j = col; j < M.cols; ++j)
        M.at(i, j) = M.at(i, j) - f * M.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class T>
std::size_t rank(Matrix<T> M) {
  return detail::echelonize(M).size();
}

// Basis of the right kernel {v : M v = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> M) {
  std::vector<std::size_t> pivots = detail::echelonize(M);
  std::vector<bool> is_pivot(M.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (std::size_t free_col = 0; free_col < M.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<T> v(M.cols, T(0));
    v[free_col] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -M.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fic
