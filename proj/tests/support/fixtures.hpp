#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "infgon/infgon.hpp"

namespace infgon::fixtures {

inline ZModel m1() { return ZModel(1); }
inline ZModel m2() { return ZModel(2); }

// The fan at vertex 0: all diagonals {0, 2+n} and {0, -2-n}.
inline DiagonalSet s1_fan() {
  ZModel z = m1();
  DiagonalSet s;
  s.families.push_back(make_family(z, VertexTerm::fixed(z.vertex(0, 0)),
                                   VertexTerm::tail_up(0, 2)));
  s.families.push_back(make_family(z, VertexTerm::fixed(z.vertex(0, 0)),
                                   VertexTerm::tail_down(0, -2)));
  return s;
}

// The leapfrog zigzag: {1+n, -1-n} and {1+n, -2-n}.
inline DiagonalSet b_leapfrog() {
  ZModel z = m1();
  DiagonalSet s;
  s.families.push_back(make_family(z, VertexTerm::tail_up(0, 1),
                                   VertexTerm::tail_down(0, -1)));
  s.families.push_back(make_family(z, VertexTerm::tail_up(0, 1),
                                   VertexTerm::tail_down(0, -2)));
  return s;
}

// The double zigzag with two limit points: zigzags filling both arcs,
// neither limit point with a fountain or a leapfrog.
inline DiagonalSet z2_zigzag() {
  ZModel z = m2();
  DiagonalSet s;
  for (int arc : {0, 1}) {
    s.families.push_back(make_family(z, VertexTerm::tail_up(arc, 1),
                                     VertexTerm::tail_down(arc, -1)));
    s.families.push_back(make_family(z, VertexTerm::tail_up(arc, 1),
                                     VertexTerm::tail_down(arc, -2)));
  }
  return s;
}

// All diagonals from vertex (0:0) in the two-limit-point model: two
// families per arc plus the three explicit cross-arc diagonals the tails
// do not reach.
inline DiagonalSet m2_fan() {
  ZModel z = m2();
  DiagonalSet s;
  Vertex v = z.vertex(0, 0);
  s.families.push_back(make_family(z, VertexTerm::fixed(v), VertexTerm::tail_up(0, 2)));
  s.families.push_back(make_family(z, VertexTerm::fixed(v), VertexTerm::tail_down(0, -2)));
  s.families.push_back(make_family(z, VertexTerm::fixed(v), VertexTerm::tail_up(1, 2)));
  s.families.push_back(make_family(z, VertexTerm::fixed(v), VertexTerm::tail_down(1, -2)));
  for (Pos k : {-1, 0, 1})
    s.explicit_members.push_back(make_diagonal(z, v, z.vertex(1, k)));
  return s;
}

// Brute-force crossing search over instantiations with parameters up to
// max_p, used as the oracle for the symbolic solver.
inline std::optional<std::pair<long long, long long>> brute_family_pair_witness(
    const ZModel& z, const DiagonalFamily& f, const DiagonalFamily& g,
    bool same_family, long long max_p) {
  for (long long n = f.min_n; n <= max_p; ++n) {
    for (long long m = g.min_n; m <= max_p; ++m) {
      if (same_family && n == m) continue;
      if (crosses(z, family_member(z, f, n), family_member(z, g, m)))
        return std::make_pair(n, m);
    }
  }
  return std::nullopt;
}

inline std::optional<long long> brute_diagonal_family_witness(
    const ZModel& z, const Diagonal& d, const DiagonalFamily& f,
    long long max_p) {
  for (long long m = f.min_n; m <= max_p; ++m)
    if (crosses(z, d, family_member(z, f, m))) return m;
  return std::nullopt;
}

// Uniform random vertex with position in [-range, range].
inline Vertex random_vertex(const ZModel& z, std::mt19937_64& rng, Pos range) {
  std::uniform_int_distribution<int> arc(0, z.limit_count() - 1);
  std::uniform_int_distribution<Pos> pos(-range, range);
  return z.vertex(arc(rng), pos(rng));
}

inline Diagonal random_diagonal(const ZModel& z, std::mt19937_64& rng, Pos range) {
  for (;;) {
    Vertex a = random_vertex(z, rng, range);
    Vertex b = random_vertex(z, rng, range);
    if (auto d = try_diagonal(z, a, b)) return *d;
  }
}

inline VertexTerm random_term(const ZModel& z, std::mt19937_64& rng, Pos range) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> arc(0, z.limit_count() - 1);
  std::uniform_int_distribution<Pos> base(-range, range);
  switch (kind(rng)) {
    case 0: return VertexTerm::fixed(z.vertex(arc(rng), base(rng)));
    case 1: return VertexTerm::tail_up(arc(rng), base(rng));
    default: return VertexTerm::tail_down(arc(rng), base(rng));
  }
}

inline DiagonalFamily random_family(const ZModel& z, std::mt19937_64& rng,
                                    Pos range) {
  for (;;) {
    VertexTerm l = random_term(z, rng, range);
    VertexTerm r = random_term(z, rng, range);
    if (!l.is_tail() && !r.is_tail()) continue;
    try {
      return make_family(z, l, r);
    } catch (const Error&) {
    }
  }
}

inline DiagonalSet random_family_set(const ZModel& z, std::mt19937_64& rng,
                                     int max_families, Pos range) {
  std::uniform_int_distribution<int> count(1, max_families);
  DiagonalSet s;
  int k = count(rng);
  for (int i = 0; i < k; ++i) s.families.push_back(random_family(z, rng, range));
  return s;
}

// Families clustered on a handful of anchor vertices, so that fountains,
// leapfrogs and their PC witnesses actually show up with fair frequency.
inline DiagonalSet clustered_family_set(const ZModel& z, std::mt19937_64& rng,
                                        int max_families) {
  std::uniform_int_distribution<int> count(1, max_families);
  std::uniform_int_distribution<int> arc(0, z.limit_count() - 1);
  std::uniform_int_distribution<int> anchor(-1, 1);
  std::uniform_int_distribution<int> shape(0, 4);
  DiagonalSet s;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    for (;;) {
      int a = arc(rng);
      VertexTerm l, r;
      switch (shape(rng)) {
        case 0:
          l = VertexTerm::fixed(z.vertex(a, anchor(rng)));
          r = VertexTerm::tail_up(arc(rng), 2 + anchor(rng));
          break;
        case 1:
          l = VertexTerm::fixed(z.vertex(a, anchor(rng)));
          r = VertexTerm::tail_down(arc(rng), -2 + anchor(rng));
          break;
        case 2:
          l = VertexTerm::tail_up(a, 1 + anchor(rng));
          r = VertexTerm::tail_down(a, -1 + anchor(rng));
          break;
        case 3:
          l = VertexTerm::tail_up(a, 1 + anchor(rng));
          r = VertexTerm::tail_down(arc(rng), -1 + anchor(rng));
          break;
        default: {
          // a full fountain: right and left halves at one vertex
          Vertex v = z.vertex(a, anchor(rng));
          s.families.push_back(make_family(z, VertexTerm::fixed(v),
                                           VertexTerm::tail_up(a, v.pos + 2)));
          l = VertexTerm::fixed(v);
          r = VertexTerm::tail_down(a, v.pos - 2);
          break;
        }
      }
      try {
        s.families.push_back(make_family(z, l, r));
        break;
      } catch (const Error&) {
      }
    }
  }
  return s;
}

}  // namespace infgon::fixtures
