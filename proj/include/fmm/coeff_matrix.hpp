#pragma once

#include <cstddef>
#include <vector>

#include "fmm/rational.hpp"

namespace fmm {

/// Sparse coefficient matrix. Stored entries are nonzero, in-bounds, and kept
/// sorted row-major, so iteration order is deterministic.
class CoeffMatrix {
 public:
  struct Entry {
    int row = 0;
    int col = 0;
    Rational value;

    friend bool operator==(const Entry& a, const Entry& b) {
      return a.row == b.row && a.col == b.col && a.value == b.value;
    }
  };

  CoeffMatrix() = default;
  CoeffMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Zero when no entry is stored at (row, col).
  Rational at(int row, int col) const;

  /// Accumulates into (row, col); the entry is erased if the sum cancels.
  /// Adding exact zero is a no-op. Out-of-bounds positions throw.
  void add(int row, int col, const Rational& value);

  CoeffMatrix transposed() const;

  friend bool operator==(const CoeffMatrix& a, const CoeffMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const CoeffMatrix& a, const CoeffMatrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Entry> entries_;
};

}  // namespace fmm
