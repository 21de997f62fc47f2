#include "fmm/coeff_matrix.hpp"

#include <algorithm>
#include <string>

#include "fmm/errors.hpp"

namespace fmm {

namespace {

bool position_less(const CoeffMatrix::Entry& e, std::pair<int, int> pos) {
  return std::make_pair(e.row, e.col) < pos;
}

}  // namespace

CoeffMatrix::CoeffMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw ParameterError("coefficient matrix dimensions must be positive, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Rational CoeffMatrix::at(int row, int col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(row, col),
                             position_less);
  if (it != entries_.end() && it->row == row && it->col == col) {
    return it->value;
  }
  return Rational(0);
}

void CoeffMatrix::add(int row, int col, const Rational& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw DimensionError("coefficient position (" + std::to_string(row) + "," +
                         std::to_string(col) + ") outside " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " matrix");
  }
  if (value.is_zero()) {
    return;
  }
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(row, col),
                             position_less);
  if (it != entries_.end() && it->row == row && it->col == col) {
    it->value += value;
    if (it->value.is_zero()) {
      entries_.erase(it);
    }
  } else {
    entries_.insert(it, Entry{row, col, value});
  }
}

CoeffMatrix CoeffMatrix::transposed() const {
  CoeffMatrix out(cols_, rows_);
  for (const Entry& e : entries_) {
    out.add(e.col, e.row, e.value);
  }
  return out;
}

}  // namespace fmm
