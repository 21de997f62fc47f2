#include <doctest.h>

#include "fmm/catalog.hpp"
#include "fmm/kronecker.hpp"
#include "fmm/scheme.hpp"
#include "fmm/verify.hpp"

using fmm::BilinearScheme;
using fmm::Dims;

TEST_CASE("product of the classical scheme with itself") {
  BilinearScheme s = fmm::strassen_scheme();
  BilinearScheme k = fmm::kronecker(s, s);
  CHECK(k.dims == Dims{4, 4, 4});
  CHECK(fmm::rank(k) == 49);
  CHECK(k.name == "kron(strassen,strassen)");
  auto rep = fmm::brent_check(k);
  CHECK(rep.passed);
  CHECK(rep.total_equations == 4096);
}

TEST_CASE("dims multiply entrywise and rank is multiplicative") {
  BilinearScheme k = fmm::kronecker(fmm::naive_scheme(2, 3, 4), fmm::naive_scheme(1, 2, 1));
  CHECK(k.dims == Dims{2, 6, 4});
  CHECK(fmm::rank(k) == 48);
  CHECK(fmm::brent_check(k).passed);
}

TEST_CASE("trivial scheme is a two-sided identity") {
  BilinearScheme one = fmm::naive_scheme(1, 1, 1);
  for (const BilinearScheme& s : {fmm::strassen_scheme(), fmm::naive_scheme(2, 3, 4)}) {
    CHECK(fmm::structurally_equal(fmm::kronecker(s, one), s));
    CHECK(fmm::structurally_equal(fmm::kronecker(one, s), s));
  }
}

TEST_CASE("first factor supplies the coarse index") {
  BilinearScheme k = fmm::kronecker(fmm::naive_scheme(2, 1, 1), fmm::naive_scheme(3, 1, 1));
  CHECK(k.dims == Dims{6, 1, 1});
  REQUIRE(fmm::rank(k) == 6);
  // term (l1=1, l2=0) sits at index 1*3+0 and reads left row 1*3+0
  const auto& alpha = k.terms[3].alpha;
  REQUIRE(alpha.entries().size() == 1);
  CHECK(alpha.entries()[0].row == 3);
  CHECK(alpha.entries()[0].col == 0);
  // term (l1=0, l2=2) reads left row 2
  CHECK(k.terms[2].alpha.entries()[0].row == 2);
}

TEST_CASE("rectangular factors preserve correctness") {
  BilinearScheme k = fmm::kronecker(fmm::strassen_scheme(), fmm::naive_scheme(1, 2, 2));
  CHECK(k.dims == Dims{2, 4, 4});
  CHECK(fmm::rank(k) == 28);
  CHECK(fmm::brent_check(k).passed);
}

TEST_CASE("verified flag survives only when both factors carry it") {
  BilinearScheme a = fmm::strassen_scheme();
  BilinearScheme b = fmm::naive_scheme(2, 2, 2);
  CHECK_FALSE(fmm::kronecker(a, b).verified);
  a.verified = true;
  CHECK_FALSE(fmm::kronecker(a, b).verified);
  b.verified = true;
  CHECK(fmm::kronecker(a, b).verified);
}

TEST_CASE("product evaluates correctly on block-structured input") {
  BilinearScheme k = fmm::kronecker(fmm::strassen_scheme(), fmm::strassen_scheme());
  auto rep = fmm::random_eval_check(k, 5, 11);
  CHECK(rep.all_equal);
}
