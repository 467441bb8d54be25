#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slackcomm/rational.hpp"

namespace slackcomm {

/// Dense row-major matrix of exact rationals. Entries may have any sign.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static Matrix identity(std::size_t n);
  static Matrix constant(std::size_t rows, std::size_t cols, const Rational& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Rational>& data() const { return data_; }

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> column(std::size_t j) const;

  bool is_nonnegative() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Throws std::invalid_argument when inner dimensions disagree.
Matrix multiply(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

/// Rows of `top` followed by rows of `bottom`; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Exact rank over the rationals by Gaussian elimination.
std::size_t rank(Matrix m);

}  // namespace slackcomm
