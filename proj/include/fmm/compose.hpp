#pragma once

#include <array>
#include <utility>

#include "fmm/block_plan.hpp"
#include "fmm/scheme.hpp"

namespace fmm {

struct ComposeOptions {
  bool strict = true;  // require verified inputs (or verify them on the spot)
};

struct CompositionReport {
  int result_rank = 0;
  std::array<int, 3> input_ranks{};  // ranks of s_uuu, s_uuv, s_vvu
  bool bound_check = false;          // result_rank == r1 + 3*r2 + 3*r3
};

/// Builds a <u+v,u+v,u+v> scheme out of an <u,u,u> scheme plus one scheme per
/// shape class ({u,u,v} and {v,v,u} multisets), following the seven-summand
/// block plan: each summand's source scheme is reoriented to the summand's
/// effective dims and its terms are spliced into global coordinates. Spliced
/// operand coefficients landing on the zero band are dropped (the operand is
/// zero there); result coefficients landing on the band are dropped because
/// the final result never reads them. Output rank is r1 + 3*r2 + 3*r3.
std::pair<BilinearScheme, CompositionReport> compose(int u, int v, const BilinearScheme& s_uuu,
                                                     const BilinearScheme& s_uuv,
                                                     const BilinearScheme& s_vvu,
                                                     const ComposeOptions& options = {});

}  // namespace fmm
