#include "slackcomm/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace slackcomm {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("matrix data size does not match " + std::to_string(rows) +
                                "x" + std::to_string(cols));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Matrix Matrix::constant(std::size_t rows, std::size_t cols, const Rational& value) {
  return Matrix(rows, cols, std::vector<Rational>(rows * cols, value));
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> Matrix::column(std::size_t j) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out.push_back((*this)(i, j));
  }
  return out;
}

bool Matrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v >= 0; });
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("cannot multiply " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(j, i) = m(i, j);
    }
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) {
    return bottom;
  }
  if (bottom.rows() == 0) {
    return top;
  }
  if (top.cols() != bottom.cols()) {
    throw std::invalid_argument("vstack: column counts differ");
  }
  std::vector<Rational> data = top.data();
  data.insert(data.end(), bottom.data().begin(), bottom.data().end());
  return Matrix(top.rows() + bottom.rows(), top.cols(), std::move(data));
}

std::size_t rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(pivot, j), m(r, j));
      }
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) {
        continue;
      }
      const Rational factor = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) -= factor * m(r, j);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace slackcomm
