#include "fmm/symmetry.hpp"

#include <functional>

#include "fmm/errors.hpp"

namespace fmm {

BilinearScheme rotate(const BilinearScheme& scheme) {
  std::vector<MulTerm> terms;
  terms.reserve(scheme.terms.size());
  for (const MulTerm& t : scheme.terms) {
    terms.push_back(MulTerm{t.beta, t.gamma.transposed(), t.alpha.transposed()});
  }
  BilinearScheme out = make_scheme({scheme.dims.v, scheme.dims.w, scheme.dims.u},
                                   std::move(terms), "rotate(" + scheme.name + ")",
                                   scheme.provenance);
  out.verified = scheme.verified;  // correctness is preserved exactly
  return out;
}

BilinearScheme transpose_dual(const BilinearScheme& scheme) {
  std::vector<MulTerm> terms;
  terms.reserve(scheme.terms.size());
  for (const MulTerm& t : scheme.terms) {
    terms.push_back(MulTerm{t.beta.transposed(), t.alpha.transposed(), t.gamma.transposed()});
  }
  BilinearScheme out = make_scheme({scheme.dims.w, scheme.dims.v, scheme.dims.u},
                                   std::move(terms), "transpose(" + scheme.name + ")",
                                   scheme.provenance);
  out.verified = scheme.verified;
  return out;
}

BilinearScheme orient(const BilinearScheme& scheme, const Dims& target) {
  const int u = scheme.dims.u, v = scheme.dims.v, w = scheme.dims.w;
  using Build = std::function<BilinearScheme(const BilinearScheme&)>;
  struct Candidate {
    Dims dims;
    Build build;
  };
  const Candidate table[6] = {
      {{u, v, w}, [](const BilinearScheme& s) { return s; }},
      {{v, w, u}, [](const BilinearScheme& s) { return rotate(s); }},
      {{w, u, v}, [](const BilinearScheme& s) { return rotate(rotate(s)); }},
      {{w, v, u}, [](const BilinearScheme& s) { return transpose_dual(s); }},
      {{v, u, w}, [](const BilinearScheme& s) { return rotate(transpose_dual(s)); }},
      {{u, w, v}, [](const BilinearScheme& s) { return transpose_dual(rotate(s)); }},
  };
  for (const Candidate& c : table) {
    if (c.dims == target) return c.build(scheme);
  }
  throw DimensionError("cannot orient " + scheme.dims.str() + " to " + target.str() +
                       ": not a permutation of the same triple");
}

}  // namespace fmm
