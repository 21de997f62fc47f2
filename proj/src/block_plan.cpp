#include "fmm/block_plan.hpp"

#include <numeric>

#include "fmm/errors.hpp"

namespace fmm {

namespace {

IndexMask full_range(int n) {
  IndexMask m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

}  // namespace

BlockPlan make_block_plan(int u, int v) {
  detail::check_split(u, v);

  const IndexMask full = full_range(u);      // unconstrained axis
  const IndexMask lead = full_range(v);      // axis pinched by the zero band

  // Shorthands for the four blocks with a sign.
  auto b = [](int r, int c, int s) { return SignedBlock{r, c, s}; };
  using Blocks = std::vector<SignedBlock>;

  BlockPlan plan;
  plan.u = u;
  plan.v = v;
  plan.padded_size = 2 * u;

  auto add = [&](Blocks left, Blocks right, Blocks out, bool row_full, bool inner_full,
                 bool col_full) {
    PlanSummand s;
    s.left_blocks = std::move(left);
    s.right_blocks = std::move(right);
    s.out_blocks = std::move(out);
    s.row_mask = row_full ? full : lead;
    s.inner_mask = inner_full ? full : lead;
    s.col_mask = col_full ? full : lead;
    s.effective_dims = {static_cast<int>(s.row_mask.size()),
                        static_cast<int>(s.inner_mask.size()),
                        static_cast<int>(s.col_mask.size())};
    plan.summands.push_back(std::move(s));
  };

  // The classical 7-product 2x2 split. An axis is pinched to [0,v) exactly
  // when every block it meets in some factor lies in the zero-banded half.
  add({b(0, 0, 1), b(1, 1, 1)}, {b(0, 0, 1), b(1, 1, 1)}, {b(0, 0, 1), b(1, 1, 1)},
      true, true, true);                                                        // 1: (u,u,u)
  add({b(0, 1, 1), b(1, 1, -1)}, {b(1, 0, 1), b(1, 1, 1)}, {b(0, 0, 1)},
      false, true, false);                                                      // 2: (v,u,v)
  add({b(1, 0, 1), b(0, 0, -1)}, {b(0, 0, 1), b(0, 1, 1)}, {b(1, 1, 1)},
      true, false, true);                                                       // 3: (u,v,u)
  add({b(0, 0, 1), b(0, 1, 1)}, {b(1, 1, 1)}, {b(1, 0, 1), b(0, 0, -1)},
      false, true, true);                                                       // 4: (v,u,u)
  add({b(0, 0, 1)}, {b(0, 1, 1), b(1, 1, -1)}, {b(1, 0, 1), b(1, 1, 1)},
      false, false, true);                                                      // 5: (v,v,u)
  add({b(1, 1, 1)}, {b(1, 0, 1), b(0, 0, -1)}, {b(0, 0, 1), b(0, 1, 1)},
      true, true, false);                                                       // 6: (u,u,v)
  add({b(1, 0, 1), b(1, 1, 1)}, {b(0, 0, 1)}, {b(0, 1, 1), b(1, 1, -1)},
      true, false, false);                                                      // 7: (u,v,v)

  return plan;
}

}  // namespace fmm
