#include "fmm/kronecker.hpp"

namespace fmm {

namespace {

CoeffMatrix kron(const CoeffMatrix& a, const CoeffMatrix& b, int b_rows, int b_cols) {
  CoeffMatrix out(a.rows() * b_rows, a.cols() * b_cols);
  for (const auto& ea : a.entries()) {
    for (const auto& eb : b.entries()) {
      out.add(ea.row * b_rows + eb.row, ea.col * b_cols + eb.col, ea.value * eb.value);
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

BilinearScheme kronecker(const BilinearScheme& s1, const BilinearScheme& s2) {
  const Dims d1 = s1.dims, d2 = s2.dims;
  std::vector<MulTerm> terms;
  terms.reserve(s1.terms.size() * s2.terms.size());
  for (const MulTerm& t1 : s1.terms) {
    for (const MulTerm& t2 : s2.terms) {
      terms.push_back(MulTerm{kron(t1.alpha, t2.alpha, d2.u, d2.v),
                              kron(t1.beta, t2.beta, d2.v, d2.w),
                              kron(t1.gamma, t2.gamma, d2.u, d2.w)});
    }
  }
  BilinearScheme out =
      make_scheme({d1.u * d2.u, d1.v * d2.v, d1.w * d2.w}, std::move(terms),
                  "kron(" + s1.name + "," + s2.name + ")",
                  merged_provenance(s1.provenance, s2.provenance));
  out.verified = s1.verified && s2.verified;
  return out;
}

}  // namespace fmm
