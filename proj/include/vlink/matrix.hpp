#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vlink/laurent.hpp"

namespace vlink {

// Dense row-major rectangular matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  // Submatrix keeping the listed rows and columns, in the given order.
  Matrix select(const std::vector<std::size_t>& keep_rows, const std::vector<std::size_t>& keep_cols) const {
    Matrix s(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i)
      for (std::size_t j = 0; j < keep_cols.size(); ++j) s(i, j) = (*this)(keep_rows[i], keep_cols[j]);
    return s;
  }

  // Submatrix with one row and one column removed.
  Matrix without(std::size_t row, std::size_t col) const {
    std::vector<std::size_t> rs;
    std::vector<std::size_t> cs;
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != row) rs.push_back(r);
    for (std::size_t c = 0; c < cols_; ++c)
      if (c != col) cs.push_back(c);
    return select(rs, cs);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using LaurentMatrix = Matrix<LaurentPoly>;

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

inline Integer divide_exact(const Integer& a, const Integer& b) { return a / b; }
inline LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = exact_quotient(a, b);
  if (!q) throw std::logic_error("fraction-free elimination produced an inexact quotient");
  return *q;
}

// Determinant by fraction-free (Bareiss) elimination with row pivoting. Every
// division performed is exact in the ring. The empty matrix has determinant 1.
template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m(swap_row, k))) ++swap_row;
      if (swap_row == n) return T{};
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(value, previous);
      }
      m(i, k) = T{};
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

}  // namespace vlink
