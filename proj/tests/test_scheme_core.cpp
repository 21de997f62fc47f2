#include <doctest.h>

#include "fmm/catalog.hpp"
#include "fmm/coeff_matrix.hpp"
#include "fmm/errors.hpp"
#include "fmm/matrix.hpp"
#include "fmm/scheme.hpp"

using fmm::BilinearScheme;
using fmm::CoeffMatrix;
using fmm::Dims;
using fmm::MulTerm;
using fmm::OpCounts;
using fmm::Rational;

namespace {

MulTerm unit_term(const Dims& d, int i, int j, int k) {
  MulTerm t{CoeffMatrix(d.u, d.v), CoeffMatrix(d.v, d.w), CoeffMatrix(d.u, d.w)};
  t.alpha.add(i, j, Rational(1));
  t.beta.add(j, k, Rational(1));
  t.gamma.add(i, k, Rational(1));
  return t;
}

}  // namespace

TEST_CASE("dims formatting and sorted key") {
  Dims d{3, 4, 2};
  CHECK(d.str() == "<3,4,2>");
  CHECK(d.sorted_key() == std::array<int, 3>{2, 3, 4});
  CHECK(d == Dims{3, 4, 2});
  CHECK_FALSE(d == Dims{4, 3, 2});
}

TEST_CASE("same_multiset compares triples up to order") {
  CHECK(fmm::same_multiset({2, 3, 4}, {4, 2, 3}));
  CHECK(fmm::same_multiset({2, 2, 3}, {3, 2, 2}));
  CHECK_FALSE(fmm::same_multiset({2, 2, 3}, {2, 3, 3}));
}

TEST_CASE("coeff matrix accumulates and cancels") {
  CoeffMatrix m(2, 3);
  CHECK(m.at(1, 2).is_zero());
  m.add(1, 2, Rational(1, 2));
  m.add(1, 2, Rational(1, 2));
  CHECK(m.at(1, 2) == Rational(1));
  m.add(1, 2, Rational(-1));
  CHECK(m.at(1, 2).is_zero());
  CHECK(m.entries().empty());

  m.add(0, 0, Rational());  // no-op
  CHECK(m.entries().empty());

  CHECK_THROWS_AS(m.add(2, 0, Rational(1)), fmm::DimensionError);
  CHECK_THROWS_AS(m.add(0, 3, Rational(1)), fmm::DimensionError);
  CHECK_THROWS_AS(CoeffMatrix(0, 1), fmm::ParameterError);
}

TEST_CASE("coeff matrix keeps entries sorted row-major") {
  CoeffMatrix m(3, 3);
  m.add(2, 1, Rational(4));
  m.add(0, 2, Rational(2));
  m.add(2, 0, Rational(3));
  m.add(0, 1, Rational(1));
  const auto& es = m.entries();
  REQUIRE(es.size() == 4);
  CHECK(es[0].row == 0);
  CHECK(es[0].col == 1);
  CHECK(es[1].row == 0);
  CHECK(es[1].col == 2);
  CHECK(es[2].row == 2);
  CHECK(es[2].col == 0);
  CHECK(es[3].row == 2);
  CHECK(es[3].col == 1);
}

TEST_CASE("coeff matrix transpose") {
  CoeffMatrix m(2, 3);
  m.add(0, 2, Rational(5));
  m.add(1, 0, Rational(-1, 3));
  CoeffMatrix t = m.transposed();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t.at(2, 0) == Rational(5));
  CHECK(t.at(0, 1) == Rational(-1, 3));
  CHECK(t.transposed() == m);
}

TEST_CASE("make_scheme validates shapes") {
  Dims d{2, 2, 2};
  SUBCASE("wrong alpha shape") {
    MulTerm t{CoeffMatrix(2, 3), CoeffMatrix(2, 2), CoeffMatrix(2, 2)};
    t.alpha.add(0, 0, Rational(1));
    t.beta.add(0, 0, Rational(1));
    t.gamma.add(0, 0, Rational(1));
    CHECK_THROWS_AS(fmm::make_scheme(d, {t}, "bad"), fmm::DimensionError);
  }
  SUBCASE("dead term rejected") {
    MulTerm t{CoeffMatrix(2, 2), CoeffMatrix(2, 2), CoeffMatrix(2, 2)};
    t.alpha.add(0, 0, Rational(1));
    t.gamma.add(0, 0, Rational(1));  // beta left empty
    CHECK_THROWS_AS(fmm::make_scheme(d, {t}, "dead"), fmm::ValidationError);
  }
  SUBCASE("nonpositive dims rejected") {
    CHECK_THROWS_AS(fmm::make_scheme({0, 2, 2}, {}, "zero"), fmm::ParameterError);
    CHECK_THROWS_AS(fmm::make_scheme({2, -1, 2}, {}, "neg"), fmm::ParameterError);
  }
}

TEST_CASE("rank is the term count") {
  CHECK(fmm::rank(fmm::strassen_scheme()) == 7);
  CHECK(fmm::rank(fmm::naive_scheme(2, 3, 4)) == 24);
}

TEST_CASE("op counts for the classical seven-term scheme") {
  OpCounts c = fmm::op_counts(fmm::strassen_scheme());
  CHECK(c.multiplications == 7);
  CHECK(c.additions == 18);
  CHECK(c.scalar_multiplications == 0);
}

TEST_CASE("op counts for cubic schemes") {
  OpCounts c2 = fmm::op_counts(fmm::naive_scheme(2, 2, 2));
  CHECK(c2 == OpCounts{8, 4, 0});
  OpCounts c1 = fmm::op_counts(fmm::naive_scheme(1, 1, 1));
  CHECK(c1 == OpCounts{1, 0, 0});
}

TEST_CASE("op counts include non-unit coefficients") {
  Dims d{1, 1, 1};
  MulTerm t{CoeffMatrix(1, 1), CoeffMatrix(1, 1), CoeffMatrix(1, 1)};
  t.alpha.add(0, 0, Rational(2));
  t.beta.add(0, 0, Rational(-1));
  t.gamma.add(0, 0, Rational(1, 2));
  BilinearScheme s = fmm::make_scheme(d, {t}, "scaled");
  OpCounts c = fmm::op_counts(s);
  CHECK(c.multiplications == 1);
  CHECK(c.additions == 0);
  CHECK(c.scalar_multiplications == 2);  // 2 and 1/2; -1 is a unit
}

TEST_CASE("structural equality ignores bookkeeping") {
  BilinearScheme a = fmm::naive_scheme(2, 2, 2);
  BilinearScheme b = fmm::naive_scheme(2, 2, 2);
  b.name = "other";
  b.provenance = "elsewhere";
  b.verified = true;
  CHECK(fmm::structurally_equal(a, b));

  BilinearScheme c = fmm::strassen_scheme();
  CHECK_FALSE(fmm::structurally_equal(a, c));

  // flipping one coefficient breaks it
  BilinearScheme d = fmm::naive_scheme(2, 2, 2);
  d.terms[3].gamma.add(d.terms[3].gamma.entries()[0].row, d.terms[3].gamma.entries()[0].col,
                       Rational(1));
  CHECK_FALSE(fmm::structurally_equal(a, d));
}

TEST_CASE("dense matrix basics") {
  fmm::Matrix<Rational> m(2, 3);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.at(1, 2).is_zero());
  m.at(1, 2) = Rational(5, 3);
  CHECK(m.at(1, 2) == Rational(5, 3));
  CHECK_THROWS_AS(m.at(2, 0), fmm::DimensionError);
  CHECK_THROWS_AS(m.at(0, 3), fmm::DimensionError);
  CHECK_THROWS_AS(m.at(-1, 0), fmm::DimensionError);
  CHECK_THROWS_AS(fmm::Matrix<Rational>(0, 2), fmm::ParameterError);

  auto id = fmm::Matrix<Rational>::identity(3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      CHECK(id.at(r, c) == (r == c ? Rational(1) : Rational(0)));
    }
  }

  fmm::Matrix<double> d(2, 2);
  d.at(0, 0) = 1.5;
  fmm::Matrix<double> e(2, 2);
  e.at(0, 0) = 1.5;
  CHECK(d == e);
  e.at(1, 1) = 0.25;
  CHECK(d != e);
}

TEST_CASE("terms built by hand match the cubic generator") {
  Dims d{2, 1, 2};
  std::vector<MulTerm> terms;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      terms.push_back(unit_term(d, i, 0, k));
    }
  }
  BilinearScheme s = fmm::make_scheme(d, std::move(terms), "naive:2,1,2");
  CHECK(fmm::structurally_equal(s, fmm::naive_scheme(2, 1, 2)));
}
