#pragma once

#include "fmm/scheme.hpp"

namespace fmm {

/// Cubic-time scheme: one multiplication per (i,j,k), rank u*v*w.
BilinearScheme naive_scheme(int u, int v, int w);

/// The classical seven-multiplication 2x2 scheme.
BilinearScheme strassen_scheme();

}  // namespace fmm
