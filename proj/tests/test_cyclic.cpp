#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "support/fixtures.hpp"

using namespace infgon;
using fixtures::m1;
using fixtures::m2;

namespace {

BoundaryPoint v1(Pos k) { return BoundaryPoint{Vertex{0, k}}; }

}  // namespace

TEST_CASE("cyclic order inside one arc embeds the linear order") {
  ZModel z = m1();
  CHECK(z.cyclic_ordered({v1(-2), v1(0), v1(7)}));
  CHECK_FALSE(z.cyclic_ordered({v1(-2), v1(7), v1(0)}));
}

TEST_CASE("limit point sits between positives and negatives") {
  ZModel z = m1();
  BoundaryPoint l0{LimitPoint{0}};
  CHECK(z.cyclic_ordered({v1(3), l0, v1(1)}));
  CHECK_FALSE(z.cyclic_ordered({v1(3), v1(1), l0}));
}

TEST_CASE("arcs are traversed in index order") {
  ZModel z = m2();
  std::vector<BoundaryPoint> pts = {BoundaryPoint{z.vertex(0, 5)},
                                    BoundaryPoint{z.limit(1)},
                                    BoundaryPoint{z.vertex(1, -4)},
                                    BoundaryPoint{z.vertex(1, 2)}};
  CHECK(z.cyclic_ordered(pts));
}

TEST_CASE("cyclic_ordered rejects duplicates and short lists") {
  ZModel z = m1();
  CHECK_THROWS_AS(z.cyclic_ordered({v1(1), v1(1), v1(2)}), InvalidInputError);
  CHECK_THROWS_AS(z.cyclic_ordered({v1(1), v1(2)}), InvalidInputError);
}

TEST_CASE("interval membership") {
  ZModel z = m1();
  CHECK(z.in_interval(v1(2), v1(0), v1(5)));
  CHECK_FALSE(z.in_interval(v1(-1), v1(0), v1(5)));
  CHECK(z.in_interval(BoundaryPoint{z.limit(0)}, v1(3), v1(-3)));
  CHECK(z.in_interval(v1(0), v1(0), v1(5)));
  CHECK(z.in_interval(v1(5), v1(0), v1(5)));
  CHECK_FALSE(z.in_interval(v1(0), v1(0), v1(5), false, true));
  CHECK_THROWS_AS(z.in_interval(v1(1), v1(2), v1(2)), InvalidInputError);
}

TEST_CASE("succ and pred") {
  ZModel z = m1();
  CHECK(ZModel::succ(z.vertex(0, 4)) == z.vertex(0, 5));
  CHECK(ZModel::pred(ZModel::succ(z.vertex(0, -7))) == z.vertex(0, -7));
  ZModel z2 = m2();
  CHECK(ZModel::pred(z2.vertex(1, 0)) == z2.vertex(1, -1));
}

TEST_CASE("limit navigation") {
  ZModel z = m1();
  CHECK(z.limit_up(z.vertex(0, 5)) == z.limit(0));
  CHECK(z.limit_down(z.vertex(0, 5)) == z.limit(0));
  ZModel z2 = m2();
  CHECK(z2.limit_up(z2.vertex(0, 3)) == z2.limit(1));
  CHECK(z2.limit_down(z2.vertex(1, -9)) == z2.limit(1));
}

TEST_CASE("limit_up interval contains no other limit point") {
  ZModel z = m2();
  Vertex v = z.vertex(0, 3);
  BoundaryPoint lu{z.limit_up(v)};
  for (int i = 0; i < z.limit_count(); ++i) {
    BoundaryPoint l{z.limit(i)};
    if (l == lu) continue;
    CHECK_FALSE(z.in_interval(l, BoundaryPoint{v}, lu));
  }
}

TEST_CASE("trichotomy and rotation invariance", "[property]") {
  std::mt19937_64 rng(7);
  for (const ZModel& z : {m1(), m2()}) {
    for (int it = 0; it < 500; ++it) {
      BoundaryPoint a{fixtures::random_vertex(z, rng, 20)};
      BoundaryPoint b{fixtures::random_vertex(z, rng, 20)};
      BoundaryPoint c{fixtures::random_vertex(z, rng, 20)};
      if (a == b || b == c || a == c) continue;
      bool abc = z.cyclic_ordered({a, b, c});
      bool acb = z.cyclic_ordered({a, c, b});
      CHECK(abc != acb);
      CHECK(z.cyclic_ordered({b, c, a}) == abc);
      CHECK(z.cyclic_ordered({c, a, b}) == abc);
      // interval consistency
      CHECK(z.in_interval(b, a, c) == abc);
    }
  }
}

TEST_CASE("dichotomy: interval up to limit_up is reached by succ steps",
          "[property]") {
  ZModel z = m2();
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    Vertex v = fixtures::random_vertex(z, rng, 12);
    Vertex w = fixtures::random_vertex(z, rng, 12);
    BoundaryPoint lu{z.limit_up(v)};
    if (!z.in_interval(BoundaryPoint{w}, BoundaryPoint{v}, lu)) continue;
    Vertex cur = v;
    bool reached = false;
    for (int steps = 0; steps < 100; ++steps) {
      if (cur == w) {
        reached = true;
        break;
      }
      cur = ZModel::succ(cur);
    }
    CHECK(reached);
  }
}
