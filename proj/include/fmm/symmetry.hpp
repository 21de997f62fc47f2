#pragma once

#include "fmm/scheme.hpp"

namespace fmm {

/// Cyclic shift of the product roles: output multiplies (v x w) by (w x u).
/// Term factors move as (alpha, beta, gamma) -> (beta, gamma^T, alpha^T).
/// Preserves correctness (trace of a matrix product is cycle-invariant).
BilinearScheme rotate(const BilinearScheme& scheme);

/// Transposition duality: output multiplies (w x v) by (v x u); factors move
/// as (alpha, beta, gamma) -> (beta^T, alpha^T, gamma^T). An involution.
BilinearScheme transpose_dual(const BilinearScheme& scheme);

/// Reorients a scheme to `target` by the shortest generator word, chosen from
/// a fixed six-entry table (first match wins, identity preferred). Throws
/// DimensionError listing both triples if target is not a permutation of the
/// scheme's dims.
BilinearScheme orient(const BilinearScheme& scheme, const Dims& target);

}  // namespace fmm
