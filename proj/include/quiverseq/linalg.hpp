#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quiverseq {

using Rational = boost::multiprecision::cpp_rational;

// Dense row-major matrix over Q.  Zero-row and zero-column shapes are legal
// and keep their dimensions.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// [A_1 | A_2 | ...], every block with `rows` rows.
Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
// [A_1; A_2; ...], every block with `cols` columns.
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form; pivots are taken leftmost column first, smallest row first.
Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Columns span ker A; one basis vector per free column, free entry 1.
Matrix kernel_basis(const Matrix& a);
// Rows span the left kernel of A, so P * A = 0 and P has full row rank.
Matrix cokernel_projection(const Matrix& a);

}  // namespace quiverseq
