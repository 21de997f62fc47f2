#pragma once

#include "fmm/scheme.hpp"

namespace fmm {

/// Tensor (Kronecker) product of two schemes: multiplies block matrices whose
/// blocks are handled by the second factor. Output dims are the entrywise
/// products, rank is the product of ranks; the first factor supplies the
/// coarse index (sub-entry ((i1,i2),(j1,j2)) lands at (i1*u2+i2, j1*v2+j2)).
BilinearScheme kronecker(const BilinearScheme& s1, const BilinearScheme& s2);

}  // namespace fmm
