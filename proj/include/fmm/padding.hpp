#pragma once

#include <string>
#include <vector>

#include "fmm/coeff_matrix.hpp"
#include "fmm/errors.hpp"
#include "fmm/matrix.hpp"

namespace fmm {

/// Sorted kept indices along one axis.
using IndexMask = std::vector<int>;

/// Rectangular keep-set: the submatrix surviving a peel.
struct PeelMask {
  IndexMask kept_rows;
  IndexMask kept_cols;
  int original_rows = 0;
  int original_cols = 0;
};

namespace detail {

inline void check_square(int got, int want, const char* label) {
  if (got != want) {
    throw DimensionError(std::string(label) + ": expected " + std::to_string(want) + "x" +
                         std::to_string(want) + ", got " + std::to_string(got));
  }
}

inline void check_split(int u, int v) {
  if (v < 1 || u <= v) {
    throw ParameterError("block split needs u > v >= 1, got u=" + std::to_string(u) +
                         ", v=" + std::to_string(v));
  }
}

}  // namespace detail

/// Embeds an (u+v)x(u+v) matrix into 2u x 2u by inserting u-v zero rows and
/// columns at position v, so all four u x u blocks are well formed. Index g
/// maps to g when g < v and to g+(u-v) otherwise.
template <class T>
Matrix<T> pad(const Matrix<T>& m, int u, int v) {
  detail::check_split(u, v);
  detail::check_square(m.rows(), u + v, "pad input rows");
  detail::check_square(m.cols(), u + v, "pad input cols");
  Matrix<T> out(2 * u, 2 * u);
  auto shift = [u, v](int g) { return g < v ? g : g + (u - v); };
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      out.at(shift(r), shift(c)) = m.at(r, c);
    }
  }
  return out;
}

/// Inverse of pad: deletes the inserted index band [v, u) from both axes.
template <class T>
Matrix<T> unpad(const Matrix<T>& m, int u, int v) {
  detail::check_split(u, v);
  detail::check_square(m.rows(), 2 * u, "unpad input rows");
  detail::check_square(m.cols(), 2 * u, "unpad input cols");
  Matrix<T> out(u + v, u + v);
  auto shift = [u, v](int g) { return g < v ? g : g + (u - v); };
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) {
      out.at(r, c) = m.at(shift(r), shift(c));
    }
  }
  return out;
}

/// Reindexes a coefficient matrix onto the kept rows/cols. A nonzero entry
/// outside the mask means the caller is about to discard live data: that is a
/// PeelViolationError, not a silent drop.
CoeffMatrix peel(const IndexMask& kept_rows, const IndexMask& kept_cols, const CoeffMatrix& coeff);

CoeffMatrix peel(const PeelMask& mask, const CoeffMatrix& coeff);

}  // namespace fmm
