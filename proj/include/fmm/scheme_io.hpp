#pragma once

#include <string>

#include "fmm/scheme.hpp"

namespace fmm {

struct LoadOptions {
  bool verify = false;  // run the exact check on load, record result
};

/// Reads a scheme file (JSON, format_version 1). Rejects structural lies:
/// rank disagreeing with the term count, zero coefficients, duplicate or
/// out-of-range indices. With verify set, runs the exact equation check,
/// sets the verified flag accordingly and annotates provenance.
BilinearScheme load_scheme(const std::string& path, const LoadOptions& options = {});

/// Writes the scheme in the same format; load(save(s)) is structurally s.
void save_scheme(const BilinearScheme& scheme, const std::string& path);

}  // namespace fmm
