#pragma once

#include <vector>

#include "fmm/padding.hpp"
#include "fmm/scheme.hpp"

namespace fmm {

/// One block of the padded 2x2 partition, with the sign it carries inside a
/// linear combination. Coordinates are 0 or 1.
struct SignedBlock {
  int row_block = 0;
  int col_block = 0;
  int sign = 1;

  friend bool operator==(const SignedBlock&, const SignedBlock&) = default;
};

/// One of the seven block-recursive products. out_blocks address the
/// third (trace) factor, whose block (X,Y) feeds result block (Y,X).
/// Masks give the live sub-indices of each axis inside a u x u block:
/// the full range [0,u) or the leading [0,v) where the padding forces zeros.
struct PlanSummand {
  std::vector<SignedBlock> left_blocks;
  std::vector<SignedBlock> right_blocks;
  std::vector<SignedBlock> out_blocks;
  Dims effective_dims;
  IndexMask row_mask;
  IndexMask inner_mask;
  IndexMask col_mask;
};

struct BlockPlan {
  int u = 0;
  int v = 0;
  int padded_size = 0;  // 2u
  std::vector<PlanSummand> summands;  // exactly 7, in recursion order
};

/// The 2x2 block recursion specialized to the padded (u+v) split: summand 1
/// is a full <u,u,u> product, summands 3,4,6 have dims-multiset {u,u,v},
/// summands 2,5,7 have {v,v,u}. Requires u > v >= 1.
BlockPlan make_block_plan(int u, int v);

}  // namespace fmm
