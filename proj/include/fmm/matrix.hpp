#pragma once

#include <string>
#include <vector>

#include "fmm/errors.hpp"

namespace fmm {

/// Dense row-major matrix over an arbitrary ring element type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) {
      throw ParameterError("matrix dims must be positive, got " + std::to_string(rows) + "x" +
                           std::to_string(cols));
    }
    data_.resize(static_cast<std::size_t>(rows) * cols, T{});
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int r, int c) {
    check(r, c);
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const T& at(int r, int c) const {
    check(r, c);
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T{1};
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw DimensionError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                           ") out of range for " + std::to_string(rows_) + "x" +
                           std::to_string(cols_));
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

}  // namespace fmm
