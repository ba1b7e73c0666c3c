#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "assr/rational.hpp"

namespace assr {

/// Dense row-major m x n matrix. Every accessor in the public interface is
/// 1-based: entry (1,1) is the top-left corner.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    validate();
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
    validate();
  }

  /// Takes ownership of row-major data of size rows*cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
    validate();
  }

  static Matrix identity(std::size_t n) {
    Matrix id(n, n, T(0));
    for (std::size_t i = 1; i <= n; ++i) id(i, i) = T(1);
    return id;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// r = min{m, n}, the maximal possible rank.
  std::size_t rank_bound() const noexcept { return std::min(rows_, cols_); }

  bool contains(std::size_t i, std::size_t j) const noexcept {
    return i >= 1 && i <= rows_ && j >= 1 && j <= cols_;
  }

  const T& operator()(std::size_t i, std::size_t j) const {
    assert(contains(i, j));
    return data_[(i - 1) * cols_ + (j - 1)];
  }
  T& operator()(std::size_t i, std::size_t j) {
    assert(contains(i, j));
    return data_[(i - 1) * cols_ + (j - 1)];
  }

  const T& at(std::size_t i, std::size_t j) const {
    if (!contains(i, j)) throw std::out_of_range(index_message(i, j));
    return (*this)(i, j);
  }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void validate() const {
    if constexpr (std::is_floating_point_v<T>) {
      for (const T& x : data_)
        if (!std::isfinite(x)) throw std::invalid_argument("matrix entries must be finite");
    }
  }

  std::string index_message(std::size_t i, std::size_t j) const {
    return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
           std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix";
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

/// P_r: p_ij = 1 iff i + j = r + 1.
template <typename T = Rational>
Matrix<T> backward_identity(std::size_t r) {
  Matrix<T> p(r, r, T(0));
  for (std::size_t i = 1; i <= r; ++i) p(i, r + 1 - i) = T(1);
  return p;
}

/// P_m A: row k of the result is row m-k+1 of A.
template <typename T>
Matrix<T> reverse_rows(const Matrix<T>& a) {
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = a(a.rows() + 1 - i, j);
  return out;
}

/// A P_n: column k of the result is column n-k+1 of A.
template <typename T>
Matrix<T> reverse_columns(const Matrix<T>& a) {
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = a(i, a.cols() + 1 - j);
  return out;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols(), T(0));
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t k = 1; k <= a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 1; j <= b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a) {
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = -a(i, j);
  return out;
}

/// The top-left rows x cols block.
template <typename T>
Matrix<T> leading_block(const Matrix<T>& a, std::size_t rows, std::size_t cols) {
  if (rows > a.rows() || cols > a.cols()) throw std::invalid_argument("block exceeds matrix");
  Matrix<T> out(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) out(i, j) = a(i, j);
  return out;
}

/// The single exact-to-floating crossing: each entry becomes its nearest double.
inline RealMatrix to_real(const RationalMatrix& a) {
  std::vector<double> data;
  data.reserve(a.data().size());
  for (const auto& x : a.data()) data.push_back(x.to_double());
  return RealMatrix(a.rows(), a.cols(), std::move(data));
}

inline double max_abs(const RealMatrix& a) {
  double m = 0.0;
  for (double x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace assr
