#pragma once

#include <array>
#include <string>
#include <vector>

#include "fmm/coeff_matrix.hpp"

namespace fmm {

/// Shape of a matrix product: a (u x v) operand times a (v x w) operand.
struct Dims {
  int u = 0;
  int v = 0;
  int w = 0;

  std::array<int, 3> sorted_key() const;
  std::string str() const;  // "<u,v,w>"

  friend bool operator==(const Dims&, const Dims&) = default;
};

/// True when the two triples agree as multisets.
bool same_multiset(const Dims& a, const Dims& b);

/// One multiplication t = (alpha . A) * (beta . B), distributed into the
/// result by gamma. gamma is indexed by result cell (i, k); the w x u
/// trilinear factor W relates to it by gamma[i,k] = W[k,i].
struct MulTerm {
  CoeffMatrix alpha;  // u x v
  CoeffMatrix beta;   // v x w
  CoeffMatrix gamma;  // u x w
};

/// A rank-r bilinear scheme for the <u,v,w> matrix product.
struct BilinearScheme {
  Dims dims;
  std::vector<MulTerm> terms;
  std::string name;
  std::string provenance;
  bool verified = false;  // set after an exact Brent pass
};

/// Validates and canonicalizes: coefficient shapes must match dims, every
/// factor of every term must be nonempty (dead terms are rejected, keeping
/// rank equal to the true multiplication count).
BilinearScheme make_scheme(Dims dims, std::vector<MulTerm> terms, std::string name,
                           std::string provenance = {});

/// Number of terms, a.k.a. the multiplication count.
int rank(const BilinearScheme& scheme);

struct OpCounts {
  long long multiplications = 0;
  long long additions = 0;
  long long scalar_multiplications = 0;  // coefficient entries outside {1, -1}

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// multiplications = rank; additions = operand-side additions per term plus
/// result-accumulation additions per result cell.
OpCounts op_counts(const BilinearScheme& scheme);

/// Compares dims and terms; name, provenance and the verified flag are
/// bookkeeping and do not participate.
bool structurally_equal(const BilinearScheme& a, const BilinearScheme& b);

}  // namespace fmm
