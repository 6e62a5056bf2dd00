#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "schurq/ring.hpp"

namespace schurq {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  void set_row(std::size_t i, const Vector& v);
  Vector col(std::size_t j) const;
  std::vector<Vector> row_list() const;

  bool is_zero() const;
  Matrix transpose() const;
  Matrix reduced(const Ring& ring) const;
  /// Rows [r0, r1) and columns [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  void add_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str(const Ring& ring) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b, const Ring& ring);
Matrix add(const Matrix& a, const Matrix& b, const Ring& ring);
Matrix scale(const Matrix& a, const Scalar& c, const Ring& ring);
Matrix kron(const Matrix& a, const Matrix& b, const Ring& ring);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Row vector times matrix.
Vector vec_mul(const Vector& v, const Matrix& m, const Ring& ring);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
Scalar determinant(const Matrix& m, const Ring& ring);

}  // namespace schurq
