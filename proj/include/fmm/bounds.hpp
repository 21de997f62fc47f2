#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fmm/scheme.hpp"

namespace fmm {

/// A known upper bound on the rank of a product shape, keyed by the sorted
/// dimension triple (all six orientations share one rank).
struct BoundEntry {
  std::array<int, 3> dims_key{};
  long long rank_bound = 0;
  std::string provenance;
};

class BoundsTable {
 public:
  /// Table holding the bounds this library can justify: the classical 2x2
  /// scheme, cited rectangular ranks, and the products/compositions built
  /// from them. Everything else falls back to the cubic count.
  static BoundsTable seeded();

  /// Requires 1 <= rank_bound <= u*v*w; a bound above the trivial count is a
  /// recording error, not information.
  void add(const Dims& dims, long long rank_bound, std::string provenance);

  /// Best stored bound over all orientations, or u*v*w when none is stored.
  long long query(const Dims& dims) const;

  /// The entry behind query(); synthesizes a "naive" entry on fallback.
  BoundEntry best_entry(const Dims& dims) const;

  /// Merges records from a JSON bounds file:
  /// {"format_version":1,"bounds":[{"u":,"v":,"w":,"bound":,"provenance":}]}
  void load_file(const std::string& path);

  std::vector<BoundEntry> entries() const;

 private:
  std::map<std::array<int, 3>, std::vector<BoundEntry>> by_key_;
};

/// Divide-and-conquer bound for the (u+v)-sized product:
/// table<u,u,u> + 3*table<u,u,v> + 3*table<v,v,u>. Requires u > v >= 1.
long long prop1_bound(int u, int v, const BoundsTable& table);

/// Arithmetic behind prop1_bound, e.g. "250 = 49+3·38+3·29".
std::string prop1_derivation(int u, int v, const BoundsTable& table);

/// Product bound for the entrywise-product shape: table<d1> * table<d2>.
long long kron_bound(const Dims& d1, const Dims& d2, const BoundsTable& table);

/// e.g. "529 = 23·23".
std::string kron_derivation(const Dims& d1, const Dims& d2, const BoundsTable& table);

}  // namespace fmm
