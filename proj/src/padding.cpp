#include "fmm/padding.hpp"

#include <algorithm>

namespace fmm {

namespace {

// Position of `index` in the sorted mask, or -1 when absent.
int mask_position(const IndexMask& mask, int index) {
  auto it = std::lower_bound(mask.begin(), mask.end(), index);
  if (it == mask.end() || *it != index) return -1;
  return static_cast<int>(it - mask.begin());
}

void check_mask(const IndexMask& mask, int limit, const char* label) {
  if (mask.empty()) throw ParameterError(std::string(label) + " mask is empty");
  if (!std::is_sorted(mask.begin(), mask.end())) {
    throw ParameterError(std::string(label) + " mask must be sorted");
  }
  if (mask.front() < 0 || mask.back() >= limit) {
    throw ParameterError(std::string(label) + " mask index out of range");
  }
}

}  // namespace

CoeffMatrix peel(const IndexMask& kept_rows, const IndexMask& kept_cols,
                 const CoeffMatrix& coeff) {
  check_mask(kept_rows, coeff.rows(), "row");
  check_mask(kept_cols, coeff.cols(), "col");
  CoeffMatrix out(static_cast<int>(kept_rows.size()), static_cast<int>(kept_cols.size()));
  for (const auto& e : coeff.entries()) {
    const int r = mask_position(kept_rows, e.row);
    const int c = mask_position(kept_cols, e.col);
    if (r < 0 || c < 0) {
      throw PeelViolationError("live coefficient at (" + std::to_string(e.row) + "," +
                               std::to_string(e.col) + ") outside the kept mask");
    }
    out.add(r, c, e.value);
  }
  return out;
}

CoeffMatrix peel(const PeelMask& mask, const CoeffMatrix& coeff) {
  if (coeff.rows() != mask.original_rows || coeff.cols() != mask.original_cols) {
    throw DimensionError("peel mask covers " + std::to_string(mask.original_rows) + "x" +
                         std::to_string(mask.original_cols) + ", coefficients are " +
                         std::to_string(coeff.rows()) + "x" + std::to_string(coeff.cols()));
  }
  return peel(mask.kept_rows, mask.kept_cols, coeff);
}

}  // namespace fmm
