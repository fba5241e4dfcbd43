#include <catch_amalgamated.hpp>

#include <random>

#include "support/fixtures.hpp"

using namespace infgon;
using fixtures::m1;
using fixtures::m2;

namespace {

Diagonal d1(Pos a, Pos b) {
  ZModel z = m1();
  return make_diagonal(z, z.vertex(0, a), z.vertex(0, b));
}

}  // namespace

TEST_CASE("ext1 is crossing") {
  ZModel z = m1();
  CHECK(ext1_dim(z, d1(0, 5), d1(2, 8)) == 1);
  CHECK(ext1_dim(z, d1(0, 5), d1(5, 9)) == 0);
  CHECK(ext1_dim(z, d1(0, 5), d1(0, 5)) == 0);
}

TEST_CASE("hom dimensions of the three-object configuration") {
  // x0=0, z1=3, y1=4, x1=7, y0=10 on one arc: the only nonzero spaces
  // among the three objects are the two between {0,7} and {10,4}, the one
  // from {0,3} to {0,7}, and the endomorphisms.
  ZModel z = m1();
  Diagonal X = d1(0, 7), Y = d1(10, 4), Zd = d1(0, 3);
  CHECK(hom_dim(z, X, Y) == 1);
  CHECK(hom_dim(z, Y, X) == 1);
  CHECK(hom_dim(z, Zd, X) == 1);
  CHECK(hom_dim(z, X, Zd) == 0);
  CHECK(hom_dim(z, Y, Zd) == 0);
  CHECK(hom_dim(z, Zd, Y) == 0);
  for (const Diagonal& d : {X, Y, Zd}) CHECK(hom_dim(z, d, d) == 1);
}

TEST_CASE("hom via interval chain") {
  ZModel z = m1();
  CHECK(hom_dim(z, d1(0, 5), d1(2, 8)) == 1);
  auto [dim, lab] = hom_dim_labeled(z, d1(0, 5), d1(2, 8));
  REQUIRE(dim == 1);
  REQUIRE(lab.has_value());
  // The labeling satisfies the defining chain.
  CHECK(z.in_interval(BoundaryPoint{lab->y0}, BoundaryPoint{lab->x0},
                      BoundaryPoint{ZModel::pred(ZModel::pred(lab->x1))}));
}

TEST_CASE("suspension formula") {
  ZModel z = m1();
  CHECK(suspend(z, d1(0, 5)) == d1(-1, 4));
  CHECK(suspend(z, suspend(z, d1(0, 5))) == d1(-2, 3));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Diagonal d = fixtures::random_diagonal(m2(), rng, 12);
    CHECK(suspend_inv(m2(), suspend(m2(), d)) == d);
  }
}

TEST_CASE("factoring criterion") {
  ZModel z = m1();
  Diagonal X = d1(0, 7), Y = d1(4, 10);
  REQUIRE(hom_dim(z, X, Y) == 1);
  CHECK(factors_through(z, X, Y, d1(2, 8)));
  CHECK_FALSE(factors_through(z, X, Y, d1(5, 8)));
  CHECK(factors_through(z, X, Y, X));
  CHECK(factors_through(z, X, Y, Y));
  CHECK_THROWS_AS(factors_through(z, d1(0, 3), d1(5, 8), d1(0, 5)),
                  NoMorphismError);
}

TEST_CASE("hom-calculus laws", "[property]") {
  std::mt19937_64 rng(29);
  for (const ZModel& z : {m1(), m2()}) {
    for (int i = 0; i < 2000; ++i) {
      Diagonal x = fixtures::random_diagonal(z, rng, 14);
      Diagonal y = fixtures::random_diagonal(z, rng, 14);
      // 2-Calabi-Yau symmetry
      CHECK(ext1_dim(z, x, y) == ext1_dim(z, y, x));
      // shift relation
      CHECK(ext1_dim(z, x, y) == hom_dim(z, x, suspend(z, y)));
      // suspension preserves crossing
      CHECK(crosses(z, x, y) == crosses(z, suspend(z, x), suspend(z, y)));
    }
  }
}

TEST_CASE("factoring is reflexive at both ends", "[property]") {
  std::mt19937_64 rng(31);
  ZModel z = m1();
  int seen = 0;
  for (int i = 0; i < 2000 && seen < 300; ++i) {
    Diagonal x = fixtures::random_diagonal(z, rng, 10);
    Diagonal y = fixtures::random_diagonal(z, rng, 10);
    if (hom_dim(z, x, y) != 1) continue;
    ++seen;
    CHECK(factors_through(z, x, y, x));
    CHECK(factors_through(z, x, y, y));
  }
  CHECK(seen >= 100);
}
