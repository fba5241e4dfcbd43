#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "support/fixtures.hpp"

using namespace infgon;
using fixtures::b_leapfrog;
using fixtures::m1;
using fixtures::m2;
using fixtures::s1_fan;

namespace {

Diagonal d1(Pos a, Pos b) {
  ZModel z = m1();
  return make_diagonal(z, z.vertex(0, a), z.vertex(0, b));
}

}  // namespace

TEST_CASE("diagonal validation rejects neighbours") {
  ZModel z = m1();
  CHECK_THROWS_AS(make_diagonal(z, z.vertex(0, 0), z.vertex(0, 1)),
                  NotADiagonalError);
  CHECK_THROWS_AS(make_diagonal(z, z.vertex(0, 0), z.vertex(0, 0)),
                  NotADiagonalError);
  CHECK_NOTHROW(make_diagonal(z, z.vertex(0, 0), z.vertex(0, 2)));
  ZModel z2 = m2();
  // Vertices in different arcs are never neighbours.
  CHECK_NOTHROW(make_diagonal(z2, z2.vertex(0, 3), z2.vertex(1, -5)));
  CHECK_NOTHROW(make_diagonal(z2, z2.vertex(0, 0), z2.vertex(1, 0)));
}

TEST_CASE("crossing basics") {
  ZModel z = m1();
  CHECK(crosses(z, d1(0, 5), d1(2, 8)));
  CHECK_FALSE(crosses(z, d1(0, 5), d1(5, 9)));
  CHECK_FALSE(crosses(z, d1(0, 5), d1(1, 4)));
}

TEST_CASE("crossing is symmetric and irreflexive", "[property]") {
  std::mt19937_64 rng(3);
  for (const ZModel& z : {m1(), m2()}) {
    for (int i = 0; i < 500; ++i) {
      Diagonal x = fixtures::random_diagonal(z, rng, 15);
      Diagonal y = fixtures::random_diagonal(z, rng, 15);
      CHECK(crosses(z, x, y) == crosses(z, y, x));
      CHECK_FALSE(crosses(z, x, x));
      if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b)
        CHECK_FALSE(crosses(z, x, y));
    }
  }
}

TEST_CASE("family instantiation") {
  ZModel z = m1();
  DiagonalFamily f = make_family(z, VertexTerm::fixed(z.vertex(0, 0)),
                                 VertexTerm::tail_up(0, 2));
  CHECK(family_member(z, f, 3) == d1(0, 5));
  DiagonalFamily b0 = make_family(z, VertexTerm::tail_up(0, 1),
                                  VertexTerm::tail_down(0, -1));
  CHECK(family_member(z, b0, 0) == d1(1, -1));
  ZModel z2 = m2();
  DiagonalFamily g = make_family(z2, VertexTerm::tail_up(0, 1),
                                 VertexTerm::tail_down(0, -2));
  Diagonal got = family_member(z2, g, 2);
  CHECK(got == make_diagonal(z2, z2.vertex(0, 3), z2.vertex(0, -4)));
  CHECK_THROWS_AS(family_member(z, f, -1), OutOfRangeError);
}

TEST_CASE("family validation rejects degenerate instantiations") {
  ZModel z = m1();
  // {n, 1+n} would be neighbours for every n.
  CHECK_THROWS_AS(
      make_family(z, VertexTerm::tail_up(0, 0), VertexTerm::tail_up(0, 1)),
      NotADiagonalError);
  // {1+n, 3-n} collides at n=1.
  CHECK_THROWS_AS(
      make_family(z, VertexTerm::tail_up(0, 1), VertexTerm::tail_down(0, 3)),
      NotADiagonalError);
  // Same shape but min_n past the collision is fine.
  CHECK_NOTHROW(
      make_family(z, VertexTerm::tail_up(0, 1), VertexTerm::tail_down(0, 3), 2));
  CHECK_THROWS_AS(make_family(z, VertexTerm::fixed(z.vertex(0, 0)),
                              VertexTerm::fixed(z.vertex(0, 5))),
                  InvalidInputError);
}

TEST_CASE("set membership") {
  ZModel z = m1();
  DiagonalSet s1 = s1_fan();
  CHECK(set_contains(z, s1, d1(0, 9)));
  CHECK_FALSE(set_contains(z, s1, d1(1, 7)));
  DiagonalSet b = b_leapfrog();
  CHECK(set_contains(z, b, d1(3, -3)));
  CHECK_FALSE(set_contains(z, b, d1(3, -5)));
}

TEST_CASE("membership of instantiated members", "[property]") {
  std::mt19937_64 rng(17);
  for (const ZModel& z : {m1(), m2()}) {
    for (int i = 0; i < 100; ++i) {
      DiagonalSet s = fixtures::random_family_set(z, rng, 3, 8);
      for (const auto& f : s.families)
        for (long long n = f.min_n; n < f.min_n + 12; ++n)
          CHECK(set_contains(z, s, family_member(z, f, n)));
    }
  }
}

TEST_CASE("window truncation of fixtures") {
  ZModel z = m1();
  std::set<Diagonal> got = truncate_window(z, s1_fan(), 5);
  std::set<Diagonal> want;
  for (Pos k : {2, 3, 4, 5, -2, -3, -4, -5}) want.insert(d1(0, k));
  CHECK(got == want);

  std::set<Diagonal> gb = truncate_window(z, b_leapfrog(), 3);
  std::set<Diagonal> wb = {d1(1, -1), d1(2, -2), d1(3, -3), d1(1, -2),
                           d1(2, -3)};
  CHECK(gb == wb);

  CHECK(truncate_window(z, DiagonalSet{}, 10).empty());
}

TEST_CASE("window truncation is monotone and exact", "[property]") {
  std::mt19937_64 rng(23);
  for (const ZModel& z : {m1(), m2()}) {
    for (int i = 0; i < 40; ++i) {
      DiagonalSet s = fixtures::random_family_set(z, rng, 3, 6);
      std::set<Diagonal> w8 = truncate_window(z, s, 8);
      std::set<Diagonal> w12 = truncate_window(z, s, 12);
      for (const Diagonal& d : w8) {
        CHECK(w12.count(d) == 1);
        CHECK(set_contains(z, s, d));
      }
      // Exactness: every window diagonal of the set is listed.
      for (const Diagonal& d : window_diagonals(z, 8))
        if (set_contains(z, s, d)) CHECK(w8.count(d) == 1);
    }
  }
}
