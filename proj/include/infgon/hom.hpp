#pragma once

#include <optional>
#include <utility>

#include "infgon/diagonal.hpp"

namespace infgon {

// A labeling (x0,x1) of X and (y0,y1) of Y satisfying the morphism chain
// x0 <= y0 <= x1-- < x1 <= y1 <= x0-- in cyclic order.
struct HomLabeling {
  Vertex x0, x1, y0, y1;
};

namespace detail {

inline bool hom_chain_holds(const ZModel& z, const Vertex& x0, const Vertex& x1,
                            const Vertex& y0, const Vertex& y1) {
  BoundaryPoint base{x0};
  Vertex x1mm = ZModel::pred(ZModel::pred(x1));
  Vertex x0mm = ZModel::pred(ZModel::pred(x0));
  auto leq = [&](const Vertex& p, const Vertex& q) {
    return z.leq_from(base, BoundaryPoint{p}, BoundaryPoint{q});
  };
  return leq(x0, y0) && leq(y0, x1mm) && leq(x1mm, x1) && x1mm != x1 &&
         leq(x1, y1) && leq(y1, x0mm);
}

}  // namespace detail

// dim Ext^1 between the objects of two diagonals: 1 iff they cross.
inline int ext1_dim(const ZModel& z, const Diagonal& x, const Diagonal& y) {
  return crosses(z, x, y) ? 1 : 0;
}

// dim Hom between the objects of two diagonals, with the witnessing
// labeling when nonzero.  All four endpoint orderings are tried; the
// satisfying ones always come as a double-swap pair, which is checked.
inline std::pair<int, std::optional<HomLabeling>> hom_dim_labeled(
    const ZModel& z, const Diagonal& x, const Diagonal& y) {
  const Vertex xs[2][2] = {{x.a, x.b}, {x.b, x.a}};
  const Vertex ys[2][2] = {{y.a, y.b}, {y.b, y.a}};
  bool holds[4];
  for (int i = 0; i < 4; ++i)
    holds[i] = detail::hom_chain_holds(z, xs[i >> 1][0], xs[i >> 1][1],
                                       ys[i & 1][0], ys[i & 1][1]);
  if (holds[0] != holds[3] || holds[1] != holds[2] || (holds[0] && holds[1]))
    throw Error("hom labeling consistency violated for " + to_string(x) +
                " vs " + to_string(y));
  for (int i = 0; i < 4; ++i) {
    if (holds[i])
      return {1, HomLabeling{xs[i >> 1][0], xs[i >> 1][1], ys[i & 1][0],
                             ys[i & 1][1]}};
  }
  return {0, std::nullopt};
}

inline int hom_dim(const ZModel& z, const Diagonal& x, const Diagonal& y) {
  return hom_dim_labeled(z, x, y).first;
}

// The suspension acts on diagonals by moving both endpoints one step
// clockwise; its inverse moves them anticlockwise.
inline Diagonal suspend(const ZModel& z, const Diagonal& x) {
  return make_diagonal(z, ZModel::pred(x.a), ZModel::pred(x.b));
}

inline Diagonal suspend_inv(const ZModel& z, const Diagonal& x) {
  return make_diagonal(z, ZModel::succ(x.a), ZModel::succ(x.b));
}

// Whether the nonzero morphism X -> Y factors through the object of s:
// s must admit a labeling with s0 in [x0, y0] and s1 in [x1, y1].
inline bool factors_through(const ZModel& z, const Diagonal& x,
                            const Diagonal& y, const Diagonal& s) {
  auto [dim, lab] = hom_dim_labeled(z, x, y);
  if (dim == 0)
    throw NoMorphismError("no nonzero morphism " + to_string(x) + " -> " +
                          to_string(y));
  auto within = [&](const Vertex& p, const Vertex& lo, const Vertex& hi) {
    if (lo == hi) return p == lo;
    return z.in_interval(BoundaryPoint{p}, BoundaryPoint{lo}, BoundaryPoint{hi});
  };
  auto fits = [&](const Vertex& s0, const Vertex& s1) {
    return within(s0, lab->x0, lab->y0) && within(s1, lab->x1, lab->y1);
  };
  return fits(s.a, s.b) || fits(s.b, s.a);
}

}  // namespace infgon
