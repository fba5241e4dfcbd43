#pragma once

#include <optional>
#include <vector>

#include "infgon/diagonal.hpp"
#include "infgon/intmath.hpp"

namespace infgon {

// One contiguous run of positions within a single arc.
struct PosPiece {
  std::optional<Pos> lo, hi;  // nullopt = unbounded on that side
};

namespace detail {

// Closed-interval membership where [a, a] means the single point {a}.
inline bool in_closed(const ZModel& z, const BoundaryPoint& x,
                      const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a == b) return x == a;
  return z.in_interval(x, a, b);
}

}  // namespace detail

// The positions k with vertex (arc, k) inside the closed interval [a, b].
// At most two pieces (the interval can enter the arc, wrap around the
// rest of the circle, and re-enter it from the other end).
inline std::vector<PosPiece> arc_pieces(const ZModel& z, const BoundaryPoint& a,
                                        const BoundaryPoint& b, int arc) {
  if (a == b) {
    if (a.is_vertex() && a.vertex().arc == arc)
      return {{a.vertex().pos, a.vertex().pos}};
    return {};
  }
  bool a_in = a.is_vertex() && a.vertex().arc == arc;
  bool b_in = b.is_vertex() && b.vertex().arc == arc;
  if (a_in && b_in) {
    Pos pa = a.vertex().pos, pb = b.vertex().pos;
    if (pa <= pb) return {{pa, pb}};
    return {{pa, std::nullopt}, {std::nullopt, pb}};
  }
  if (a_in) return {{a.vertex().pos, std::nullopt}};
  if (b_in) return {{std::nullopt, b.vertex().pos}};
  // Neither interval end lies inside this arc, so the arc is wholly in
  // or wholly out; any representative decides.
  if (z.in_interval(BoundaryPoint{Vertex{arc, 0}}, a, b))
    return {{std::nullopt, std::nullopt}};
  return {};
}

namespace detail {

struct NRange {
  long long lo = 0;
  std::optional<long long> hi;
  bool empty = false;
};

// Parameters n >= min_n with tail(n) inside the piece.
inline NRange tail_range_in_piece(const VertexTerm& t, long long min_n,
                                  const PosPiece& piece) {
  long long c = t.coef();
  NRange r{min_n, std::nullopt, false};
  auto clamp = [&](Pos bound, bool upper) {
    // upper: base + c*n <= bound; lower: base + c*n >= bound
    if ((c > 0) == upper) {
      long long q = floor_div<long long>(bound - t.base, c);
      if (!r.hi || *r.hi > q) r.hi = q;
    } else {
      r.lo = std::max(r.lo, ceil_div<long long>(bound - t.base, c));
    }
  };
  if (piece.lo) clamp(*piece.lo, false);
  if (piece.hi) clamp(*piece.hi, true);
  if (r.hi && *r.hi < r.lo) r.empty = true;
  return r;
}

// The largest-position value of the tail restricted to the given
// parameter range.  Within one arc piece the interval order is the
// position order, so a falling tail peaks at its first parameter, while
// a rising tail peaks at its last one -- or accumulates at the arc's
// upper limit point when the range is infinite.
inline std::optional<BoundaryPoint> tail_sup_candidate(const ZModel& z,
                                                       const VertexTerm& t,
                                                       const NRange& r) {
  if (r.empty) return std::nullopt;
  if (t.kind == TermKind::TailDown) return BoundaryPoint{t.at(z, r.lo)};
  if (!r.hi) return BoundaryPoint{z.limit_up(Vertex{t.arc, 0})};
  return BoundaryPoint{t.at(z, *r.hi)};
}

}  // namespace detail

// Supremum, in the linear order of the closed interval [a, b], of the
// partner endpoints w with {anchor, w} a member and w in [a, b].
// Returns nullopt when that set is empty.  Tails contribute their
// maximal in-interval member, or their limit point when unbounded.
inline std::optional<BoundaryPoint> partner_sup(const ZModel& z,
                                                const DiagonalSet& s,
                                                const Vertex& anchor,
                                                const BoundaryPoint& a,
                                                const BoundaryPoint& b) {
  std::vector<BoundaryPoint> candidates;
  auto consider = [&](const BoundaryPoint& w) {
    if (detail::in_closed(z, w, a, b)) candidates.push_back(w);
  };
  for (const auto& d : s.explicit_members) {
    if (d.a == anchor) consider(BoundaryPoint{d.b});
    if (d.b == anchor) consider(BoundaryPoint{d.a});
  }
  for (const auto& f : s.families) {
    for (auto [ta, tw] : {std::pair{f.left, f.right}, {f.right, f.left}}) {
      TermMatch m = match_term(ta, anchor);
      if (m.none()) continue;
      if (m.exact) {
        if (*m.exact >= f.min_n) consider(BoundaryPoint{tw.at(z, *m.exact)});
        continue;
      }
      // Fixed anchor: the partner tail sweeps; collect its suprema piecewise.
      for (const PosPiece& piece : arc_pieces(z, a, b, tw.arc)) {
        auto r = detail::tail_range_in_piece(tw, f.min_n, piece);
        if (auto cand = detail::tail_sup_candidate(z, tw, r)) consider(*cand);
      }
    }
  }
  if (candidates.empty()) return std::nullopt;
  BoundaryPoint best = candidates.front();
  for (const auto& c : candidates)
    if (z.leq_from(a, best, c)) best = c;
  return best;
}

// Supremum of the set of endpoints x0 in [a0, b0] of members whose other
// endpoint lies in [a1, b1] (the W0 set of the precover construction).
inline std::optional<BoundaryPoint> endpoint_sup(
    const ZModel& z, const DiagonalSet& s, const BoundaryPoint& a0,
    const BoundaryPoint& b0, const BoundaryPoint& a1, const BoundaryPoint& b1) {
  std::vector<BoundaryPoint> candidates;
  for (const auto& d : s.explicit_members) {
    for (auto [x, y] : {std::pair{d.a, d.b}, {d.b, d.a}}) {
      if (detail::in_closed(z, BoundaryPoint{x}, a0, b0) &&
          detail::in_closed(z, BoundaryPoint{y}, a1, b1))
        candidates.push_back(BoundaryPoint{x});
    }
  }
  for (const auto& f : s.families) {
    for (auto [t0, t1] : {std::pair{f.left, f.right}, {f.right, f.left}}) {
      // Parameter ranges placing t0 in [a0,b0] and t1 in [a1,b1].
      std::vector<detail::NRange> r0s, r1s;
      auto ranges_for = [&](const VertexTerm& t, const BoundaryPoint& lo,
                            const BoundaryPoint& hi,
                            std::vector<detail::NRange>& out) {
        if (!t.is_tail()) {
          if (detail::in_closed(z, BoundaryPoint{Vertex{t.arc, t.base}}, lo, hi))
            out.push_back({f.min_n, std::nullopt, false});
          return;
        }
        for (const PosPiece& piece : arc_pieces(z, lo, hi, t.arc)) {
          auto r = detail::tail_range_in_piece(t, f.min_n, piece);
          if (!r.empty) out.push_back(r);
        }
      };
      ranges_for(t0, a0, b0, r0s);
      ranges_for(t1, a1, b1, r1s);
      for (const auto& r0 : r0s) {
        for (const auto& r1 : r1s) {
          detail::NRange r{std::max(r0.lo, r1.lo), std::nullopt, false};
          if (r0.hi) r.hi = r0.hi;
          if (r1.hi && (!r.hi || *r1.hi < *r.hi)) r.hi = r1.hi;
          if (r.hi && *r.hi < r.lo) continue;
          if (!t0.is_tail()) {
            candidates.push_back(BoundaryPoint{Vertex{t0.arc, t0.base}});
          } else if (auto cand = detail::tail_sup_candidate(z, t0, r)) {
            if (detail::in_closed(z, *cand, a0, b0)) candidates.push_back(*cand);
          }
        }
      }
    }
  }
  if (candidates.empty()) return std::nullopt;
  BoundaryPoint best = candidates.front();
  for (const auto& c : candidates)
    if (z.leq_from(a0, best, c)) best = c;
  return best;
}

enum class WKind { W0, W1 };

// The suprema of the precover construction.  y0/y1 are the ordered
// endpoints of the target diagonal; preconditions follow the definition
// of the W sets: t0 in [y1++, y0], t1 in [y0++, y1].
inline std::optional<BoundaryPoint> sup_w(const ZModel& z, const DiagonalSet& s,
                                          const Vertex& y0, const Vertex& y1,
                                          const Vertex& t0, const Vertex& t1,
                                          WKind which,
                                          std::optional<Vertex> u0 = {}) {
  Vertex y1pp = ZModel::succ(ZModel::succ(y1));
  Vertex y0pp = ZModel::succ(ZModel::succ(y0));
  if (!detail::in_closed(z, BoundaryPoint{t0}, BoundaryPoint{y1pp},
                         BoundaryPoint{y0}))
    throw InvalidInputError("sup_w: t0 outside [y1++, y0]");
  if (!detail::in_closed(z, BoundaryPoint{t1}, BoundaryPoint{y0pp},
                         BoundaryPoint{y1}))
    throw InvalidInputError("sup_w: t1 outside [y0++, y1]");
  if (which == WKind::W0)
    return endpoint_sup(z, s, BoundaryPoint{y1pp}, BoundaryPoint{t0},
                        BoundaryPoint{t1}, BoundaryPoint{y1});
  if (!u0) throw InvalidInputError("sup_w: W1 requires u0");
  return partner_sup(z, s, *u0, BoundaryPoint{t1}, BoundaryPoint{y1});
}

// Supremum of the partners of s inside [s, t].
inline std::optional<BoundaryPoint> sup_u(const ZModel& z, const DiagonalSet& set,
                                          const Vertex& s,
                                          const BoundaryPoint& t) {
  if (BoundaryPoint{s} == t) throw InvalidInputError("sup_u: s == t");
  return partner_sup(z, set, s, BoundaryPoint{s}, t);
}

}  // namespace infgon
