#include "fmm/scheme.hpp"

#include <algorithm>
#include <unordered_map>

#include "fmm/errors.hpp"

namespace fmm {

std::array<int, 3> Dims::sorted_key() const {
  std::array<int, 3> key{u, v, w};
  std::sort(key.begin(), key.end());
  return key;
}

std::string Dims::str() const {
  return "<" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ">";
}

bool same_multiset(const Dims& a, const Dims& b) { return a.sorted_key() == b.sorted_key(); }

namespace {

void check_factor(const CoeffMatrix& m, int rows, int cols, std::size_t term_index,
                  const char* which) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError("term " + std::to_string(term_index) + ": " + which + " is " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

BilinearScheme make_scheme(Dims dims, std::vector<MulTerm> terms, std::string name,
                           std::string provenance) {
  if (dims.u <= 0 || dims.v <= 0 || dims.w <= 0) {
    throw ParameterError("scheme dims must be positive, got " + dims.str());
  }
  for (std::size_t l = 0; l < terms.size(); ++l) {
    const MulTerm& t = terms[l];
    check_factor(t.alpha, dims.u, dims.v, l, "alpha");
    check_factor(t.beta, dims.v, dims.w, l, "beta");
    check_factor(t.gamma, dims.u, dims.w, l, "gamma");
    if (t.alpha.empty() || t.beta.empty() || t.gamma.empty()) {
      throw ValidationError("term " + std::to_string(l) +
                            " is dead (a factor has no entries); drop it instead");
    }
  }
  BilinearScheme s;
  s.dims = dims;
  s.terms = std::move(terms);
  s.name = std::move(name);
  s.provenance = std::move(provenance);
  return s;
}

int rank(const BilinearScheme& scheme) { return static_cast<int>(scheme.terms.size()); }

OpCounts op_counts(const BilinearScheme& scheme) {
  OpCounts counts;
  counts.multiplications = static_cast<long long>(scheme.terms.size());

  auto non_unit = [](const CoeffMatrix& m) {
    long long n = 0;
    for (const auto& e : m.entries()) {
      if (!e.value.is_unit()) ++n;
    }
    return n;
  };

  // Contributions per result cell; a cell hit c times costs c-1 additions.
  std::unordered_map<long long, long long> cell_hits;
  for (const MulTerm& t : scheme.terms) {
    counts.additions += static_cast<long long>(t.alpha.nnz()) - 1;
    counts.additions += static_cast<long long>(t.beta.nnz()) - 1;
    counts.scalar_multiplications += non_unit(t.alpha) + non_unit(t.beta) + non_unit(t.gamma);
    for (const auto& e : t.gamma.entries()) {
      ++cell_hits[static_cast<long long>(e.row) * scheme.dims.w + e.col];
    }
  }
  for (const auto& [cell, hits] : cell_hits) {
    (void)cell;
    if (hits > 1) counts.additions += hits - 1;
  }
  return counts;
}

bool structurally_equal(const BilinearScheme& a, const BilinearScheme& b) {
  if (a.dims != b.dims || a.terms.size() != b.terms.size()) return false;
  for (std::size_t l = 0; l < a.terms.size(); ++l) {
    if (a.terms[l].alpha != b.terms[l].alpha || a.terms[l].beta != b.terms[l].beta ||
        a.terms[l].gamma != b.terms[l].gamma) {
      return false;
    }
  }
  return true;
}

}  // namespace fmm
