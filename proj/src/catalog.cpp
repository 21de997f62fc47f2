#include "fmm/catalog.hpp"

#include "fmm/errors.hpp"

namespace fmm {

BilinearScheme naive_scheme(int u, int v, int w) {
  if (u < 1 || v < 1 || w < 1) {
    throw ParameterError("naive scheme dims must be >= 1, got " + Dims{u, v, w}.str());
  }
  std::vector<MulTerm> terms;
  terms.reserve(static_cast<std::size_t>(u) * v * w);
  for (int i = 0; i < u; ++i) {
    for (int j = 0; j < v; ++j) {
      for (int k = 0; k < w; ++k) {
        MulTerm t{CoeffMatrix(u, v), CoeffMatrix(v, w), CoeffMatrix(u, w)};
        t.alpha.add(i, j, Rational(1));
        t.beta.add(j, k, Rational(1));
        t.gamma.add(i, k, Rational(1));
        terms.push_back(std::move(t));
      }
    }
  }
  const std::string spec =
      std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w);
  return make_scheme({u, v, w}, std::move(terms), "naive:" + spec, "textbook cubic algorithm");
}

BilinearScheme strassen_scheme() {
  // Rows of the table: per term, signed entries of each factor.
  struct E {
    int r, c, s;
  };
  struct Row {
    std::vector<E> alpha, beta, gamma;
  };
  const Row rows[7] = {
      {{{0, 0, 1}, {1, 1, 1}}, {{0, 0, 1}, {1, 1, 1}}, {{0, 0, 1}, {1, 1, 1}}},
      {{{0, 1, 1}, {1, 1, -1}}, {{1, 0, 1}, {1, 1, 1}}, {{0, 0, 1}}},
      {{{0, 0, -1}, {1, 0, 1}}, {{0, 0, 1}, {0, 1, 1}}, {{1, 1, 1}}},
      {{{0, 0, 1}, {0, 1, 1}}, {{1, 1, 1}}, {{0, 0, -1}, {0, 1, 1}}},
      {{{0, 0, 1}}, {{0, 1, 1}, {1, 1, -1}}, {{0, 1, 1}, {1, 1, 1}}},
      {{{1, 1, 1}}, {{0, 0, -1}, {1, 0, 1}}, {{0, 0, 1}, {1, 0, 1}}},
      {{{1, 0, 1}, {1, 1, 1}}, {{0, 0, 1}}, {{1, 0, 1}, {1, 1, -1}}},
  };
  std::vector<MulTerm> terms;
  terms.reserve(7);
  for (const Row& row : rows) {
    MulTerm t{CoeffMatrix(2, 2), CoeffMatrix(2, 2), CoeffMatrix(2, 2)};
    for (const E& e : row.alpha) t.alpha.add(e.r, e.c, Rational(e.s));
    for (const E& e : row.beta) t.beta.add(e.r, e.c, Rational(e.s));
    for (const E& e : row.gamma) t.gamma.add(e.r, e.c, Rational(e.s));
    terms.push_back(std::move(t));
  }
  return make_scheme({2, 2, 2}, std::move(terms), "strassen", "Strassen 1969");
}

}  // namespace fmm
