#include "fmm/compose.hpp"

#include <string>

#include "fmm/errors.hpp"
#include "fmm/symmetry.hpp"
#include "fmm/verify.hpp"

namespace fmm {

namespace {

void require_multiset(const BilinearScheme& s, const Dims& want, const char* label) {
  if (!same_multiset(s.dims, want)) {
    throw DimensionError(std::string(label) + " has dims " + s.dims.str() +
                         ", expected a permutation of " + want.str());
  }
}

void require_sound(const BilinearScheme& s, const char* label) {
  if (s.verified) return;
  if (!brent_check(s).passed) {
    throw ValidationError(std::string(label) + " (" + s.name +
                          ") fails exact verification; pass strict=false to override");
  }
}

// Splices one coefficient matrix of a summand term into global coordinates.
// in_band entries vanish: on operand factors the padded operand is zero
// there, on the output factor the final result never reads them.
CoeffMatrix splice(const CoeffMatrix& coeff, const std::vector<SignedBlock>& blocks,
                   const IndexMask& row_mask, const IndexMask& col_mask, bool blocks_transposed,
                   int u, int v) {
  const int n = u + v;
  auto in_band = [u, v](int p) { return p >= v && p < u; };
  auto original_index = [u, v](int p) { return p < v ? p : p - (u - v); };
  CoeffMatrix out(n, n);
  for (const SignedBlock& blk : blocks) {
    const int row_block = blocks_transposed ? blk.col_block : blk.row_block;
    const int col_block = blocks_transposed ? blk.row_block : blk.col_block;
    for (const auto& e : coeff.entries()) {
      const int pr = row_block * u + row_mask[e.row];
      const int pc = col_block * u + col_mask[e.col];
      if (in_band(pr) || in_band(pc)) continue;
      out.add(original_index(pr), original_index(pc),
              blk.sign > 0 ? e.value : -e.value);
    }
  }
  return out;
}

std::string merged_provenance(const std::string& p1, const std::string& p2) {
  if (p1.empty() || p1 == p2) return p2;
  if (p2.empty()) return p1;
  return p1 + "; " + p2;
}

}  // namespace

std::pair<BilinearScheme, CompositionReport> compose(int u, int v, const BilinearScheme& s_uuu,
                                                     const BilinearScheme& s_uuv,
                                                     const BilinearScheme& s_vvu,
                                                     const ComposeOptions& options) {
  detail::check_split(u, v);
  if (s_uuu.dims != Dims{u, u, u}) {
    throw DimensionError("s_uuu has dims " + s_uuu.dims.str() + ", expected " +
                         Dims{u, u, u}.str());
  }
  require_multiset(s_uuv, {u, u, v}, "s_uuv");
  require_multiset(s_vvu, {v, v, u}, "s_vvu");
  if (options.strict) {
    require_sound(s_uuu, "s_uuu");
    require_sound(s_uuv, "s_uuv");
    require_sound(s_vvu, "s_vvu");
  }

  const BlockPlan plan = make_block_plan(u, v);
  std::vector<MulTerm> terms;
  for (const PlanSummand& summand : plan.summands) {
    int u_count = 0;
    for (int d : {summand.effective_dims.u, summand.effective_dims.v, summand.effective_dims.w}) {
      if (d == u) ++u_count;
    }
    const BilinearScheme& source = u_count == 3 ? s_uuu : (u_count == 2 ? s_uuv : s_vvu);
    const BilinearScheme oriented = orient(source, summand.effective_dims);
    for (const MulTerm& t : oriented.terms) {
      MulTerm spliced;
      spliced.alpha =
          splice(t.alpha, summand.left_blocks, summand.row_mask, summand.inner_mask, false, u, v);
      spliced.beta =
          splice(t.beta, summand.right_blocks, summand.inner_mask, summand.col_mask, false, u, v);
      // Output blocks address the trace factor; result block indices are the
      // transpose position.
      spliced.gamma =
          splice(t.gamma, summand.out_blocks, summand.row_mask, summand.col_mask, true, u, v);
      if (spliced.alpha.empty() || spliced.beta.empty() || spliced.gamma.empty()) {
        throw PeelViolationError("splicing emptied a term of " + source.name +
                                 "; the block plan is unsound for these inputs");
      }
      terms.push_back(std::move(spliced));
    }
  }

  CompositionReport report;
  report.result_rank = static_cast<int>(terms.size());
  report.input_ranks = {rank(s_uuu), rank(s_uuv), rank(s_vvu)};
  report.bound_check = report.result_rank ==
                       report.input_ranks[0] + 3 * report.input_ranks[1] + 3 * report.input_ranks[2];

  const int n = u + v;
  BilinearScheme out = make_scheme(
      {n, n, n}, std::move(terms),
      "compose(" + s_uuu.name + "," + s_uuv.name + "," + s_vvu.name + ")",
      merged_provenance(merged_provenance(s_uuu.provenance, s_uuv.provenance), s_vvu.provenance));
  return {std::move(out), report};
}

}  // namespace fmm
